#include "twoatom/core_model.hpp"

#include <cmath>
#include <string>

#include "twoatom/errors.hpp"

namespace twoatom {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw ValidationError(std::string(name) + " must be finite and > 0, got " +
                          std::to_string(v));
  }
}

}  // namespace

void ModelParams::validate() const {
  require_positive(dipole_strength, "dipole_strength");
  require_positive(alpha, "alpha");
  require_positive(bilinear_scale, "bilinear_scale");
  if (!(std::isfinite(nu_max) && nu_max > 1.0)) {
    throw ValidationError("nu_max must be finite and > 1, got " + std::to_string(nu_max));
  }
  if (z_max_factor) require_positive(*z_max_factor, "z_max_factor");
}

Kinematics::Kinematics(double x, double z) : x_(x), z_(z), omega_t_(0.0) {
  require_positive(x, "x");
  require_positive(z, "z");
  omega_t_ = z / x;
}

Kinematics Kinematics::from_omega_t(double omega_t, double z) {
  require_positive(omega_t, "omega_t");
  require_positive(z, "z");
  Kinematics k(z / omega_t, z);
  k.omega_t_ = omega_t;
  return k;
}

double omega_t(const Kinematics& k) { return k.omega_t(); }

double coupling_k(const ModelParams& p, const Kinematics& k) {
  const double z = k.z();
  return p.alpha * p.dipole_strength * p.dipole_strength / (z * z);
}

}  // namespace twoatom
