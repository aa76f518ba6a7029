#include <doctest.h>

#include <cmath>

#include "twoatom/core_model.hpp"
#include "twoatom/errors.hpp"

using namespace twoatom;

TEST_CASE("omega_t is z / x") {
  CHECK(omega_t(Kinematics(1.0, 5.0)) == 5.0);
  CHECK(omega_t(Kinematics(0.5, 6.0)) == 12.0);
  CHECK(omega_t(Kinematics(5.0 / 6.0, 5.0)) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("from_omega_t keeps Omega t exact") {
  const auto k = Kinematics::from_omega_t(9.0, 7.3);
  CHECK(k.omega_t() == 9.0);
  CHECK(k.z() == 7.3);
  CHECK(k.x() == 7.3 / 9.0);
}

TEST_CASE("coupling K = alpha D^2 / z^2") {
  ModelParams p;
  const double k5 = coupling_k(p, Kinematics(1.0, 5.0));
  CHECK(k5 == doctest::Approx(kFineStructure * 25e-6 / 25.0).epsilon(1e-15));
  CHECK(coupling_k(p, Kinematics(1.0, 10.0)) == doctest::Approx(k5 / 4.0).epsilon(1e-15));
  for (double z : {0.3, 2.0, 17.0}) {
    CHECK(coupling_k(p, Kinematics(0.7, z)) * z * z ==
          doctest::Approx(k5 * 25.0).epsilon(1e-14));
  }
  p.dipole_strength = 0.0;
  CHECK(coupling_k(p, Kinematics(1.0, 3.0)) == 0.0);
}

TEST_CASE("light-cone predicate is strict") {
  CHECK(Kinematics(1.0 - 1e-12, 4.0).inside_lightcone());
  CHECK_FALSE(Kinematics(1.0 + 1e-12, 4.0).inside_lightcone());
  CHECK_FALSE(Kinematics(1.0, 4.0).inside_lightcone());
  CHECK(Kinematics(1.0, 4.0).on_cone());
  CHECK_FALSE(Kinematics(1.0 - 1e-12, 4.0).on_cone());
}

TEST_CASE("cone offset stays accurate next to x = 1") {
  const double x = 1.0 + 1e-12;
  const Kinematics k(x, 10.0);
  CHECK(k.cone_offset() == doctest::Approx(10.0 * (x - 1.0) / x).epsilon(1e-15));
  CHECK(k.cone_offset() > 0.0);
  CHECK(Kinematics(1.0, 3.0).cone_offset() == 0.0);
}

TEST_CASE("invalid points and parameters are rejected") {
  CHECK_THROWS_AS(Kinematics(0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(Kinematics(1.0, -1.0), ValidationError);
  CHECK_THROWS_AS(Kinematics(NAN, 1.0), ValidationError);
  CHECK_THROWS_AS(Kinematics::from_omega_t(0.0, 1.0), ValidationError);

  ModelParams p;
  CHECK_NOTHROW(p.validate());
  p.nu_max = 1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.dipole_strength = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.alpha = -1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.z_max_factor = -2.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("z_max factor defaults to the frequency cutoff") {
  ModelParams p;
  p.nu_max = 37.0;
  CHECK(p.z_max_ratio() == 37.0);
  p.z_max_factor = 3.0;
  CHECK(p.z_max_ratio() == 3.0);
}
