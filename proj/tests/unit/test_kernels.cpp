#include <doctest.h>

#include <cmath>
#include <random>

#include "twoatom/errors.hpp"
#include "twoatom/kernels/kernels.hpp"
#include "twoatom/mode_kernels.hpp"

using namespace twoatom;
using namespace twoatom::kernels;

namespace {

SpectralNodes nodes_for(double x, double z, double nu_max, int order) {
  const Kinematics k(x, z);
  return build_nodes(spectral_node_set(nu_max, k.omega_t(), k.z(), 1.0, order), k.omega_t(), z);
}

double rel(std::complex<double> a, std::complex<double> b, double scale) {
  return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("ISA names and dispatch") {
  CHECK(isa_name(Isa::scalar) == "scalar");
  CHECK(isa_name(Isa::avx2) == "avx2");
  CHECK(isa_supported(Isa::scalar));
  MESSAGE("active ISA: " << isa_name(active_isa()));
}

TEST_CASE("AVX2 sums equal the scalar reference") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("AVX2 not available; nothing to compare");
    return;
  }
  // Sizes not divisible by 4 exercise the scalar tails.
  struct Case {
    double x, z;
    int order;
  };
  for (auto [x, z, order] : {Case{0.5, 2.0, 8}, Case{1.5, 5.0, 7}, Case{0.2, 15.0, 6},
                             Case{3.0, 1.0, 5}}) {
    const auto n = nodes_for(x, z, 20.0, order);
    CAPTURE(n.size());
    const auto a = spectral_sums(n, Isa::scalar);
    const auto b = spectral_sums(n, Isa::avx2);
    CHECK(std::abs(a.u2 - b.u2) <= 1e-13 * a.u2);
    CHECK(std::abs(a.v2 - b.v2) <= 1e-13 * a.v2);
    CHECK(std::abs(a.m_uu - b.m_uu) <= 1e-13 * a.abs_m_uu);
    CHECK(std::abs(a.m_vv - b.m_vv) <= 1e-13 * a.abs_m_vv);
    CHECK(rel(a.l_cross, b.l_cross, a.abs_l_cross) <= 1e-13);
    CHECK(rel(a.uv_same, b.uv_same, a.abs_uv_same) <= 1e-13);
    CHECK(std::abs(a.abs_l_cross - b.abs_l_cross) <= 1e-13 * a.abs_l_cross);

    const auto pa = pair_sums(n, Isa::scalar);
    const auto pb = pair_sums(n, Isa::avx2);
    CHECK(std::abs(pa.f2 - pb.f2) <= 1e-12 * pa.f2);
    const double g2 = 2.0 * (a.u2 * a.u2 + a.m_uu * a.m_uu);
    CHECK(rel(pa.fg, pb.fg, std::sqrt(pa.f2 * g2)) <= 1e-12);
  }
}

TEST_CASE("random node sets: scalar and AVX2 agree") {
  if (!isa_supported(Isa::avx2)) return;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int size : {1, 3, 4, 5, 17, 64}) {
    quadrature::NodeSet ns;
    for (int i = 0; i < size; ++i) {
      double nu = 0.05 + 9.0 * u(rng);
      if (std::abs(nu - 1.0) < 1e-3) nu += 0.01;
      ns.x.push_back(nu);
      ns.w.push_back(u(rng));
    }
    const auto n = build_nodes(ns, 3.0 + 5.0 * u(rng), 0.5 + 4.0 * u(rng));
    const auto a = pair_sums(n, Isa::scalar);
    const auto b = pair_sums(n, Isa::avx2);
    CAPTURE(size);
    CHECK(std::abs(a.f2 - b.f2) <= 1e-12 * a.f2);
    CHECK(std::abs(a.fg - b.fg) <= 1e-12 * std::max(std::abs(a.fg), 1e-300) + 1e-14 * a.f2);
  }
}

TEST_CASE("pair sums are bitwise reproducible") {
  const auto n = nodes_for(0.7, 5.0, 20.0, 8);
  for (Isa isa : {Isa::scalar, active_isa()}) {
    const auto a = pair_sums(n, isa);
    const auto b = pair_sums(n, isa);
    CHECK(a.f2 == b.f2);
    CHECK(a.fg == b.fg);
  }
}

TEST_CASE("nodes on the resonance are rejected") {
  quadrature::NodeSet ns{{0.5, 1.0}, {0.1, 0.1}};
  CHECK_THROWS_AS(build_nodes(ns, 2.0, 1.0), ValidationError);
}
