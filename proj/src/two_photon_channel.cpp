#include "twoatom/two_photon_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "twoatom/concurrence.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/kernels/kernels.hpp"

namespace twoatom {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

struct RawPair {
  double f2 = 0.0;
  cplx fg;
  double u2 = 0.0;
  double m_uu = 0.0;
};

RawPair raw_pair(double nu_max, const Kinematics& k, double panels, int order) {
  const auto ns = spectral_node_set(nu_max, k.omega_t(), k.z(), panels, order);
  const auto nodes = kernels::build_nodes(ns, k.omega_t(), k.z());
  const auto s = kernels::spectral_sums(nodes);
  const auto ps = kernels::pair_sums(nodes);
  return {ps.f2, ps.fg, s.u2, s.m_uu};
}

TwoPhotonBilinears assemble(const RawPair& r, const ModelParams& p, const Kinematics& k) {
  const double c = bilinear_prefactor(p);
  const double c2 = c * c;
  TwoPhotonBilinears out;
  out.at = k;
  out.f2 = c2 * r.f2;
  out.fg = c2 * r.fg;
  out.g2 = 2.0 * c2 * (r.u2 * r.u2 + r.m_uu * r.m_uu);
  return out;
}

TwoPhotonBilinears converged(double nu_max, const ModelParams& p, const Kinematics& k,
                             const PairGrid& grid) {
  double panels = grid.panels_per_half_period;
  double worst = 0.0;
  for (int level = 0; level <= grid.max_refinements; ++level, panels *= 2.0) {
    const RawPair fine = raw_pair(nu_max, k, panels, grid.order);
    const RawPair coarse = raw_pair(nu_max, k, panels, grid.check_order);
    const double g2 = 2.0 * (fine.u2 * fine.u2 + fine.m_uu * fine.m_uu);
    const double e_f2 = fine.f2 > 0.0 ? std::abs(fine.f2 - coarse.f2) / fine.f2 : 0.0;
    const double norm = std::sqrt(fine.f2 * g2);
    const double e_fg = norm > 0.0 ? std::abs(fine.fg - coarse.fg) / norm : 0.0;
    worst = std::max(e_f2, e_fg);
    if (worst <= grid.tolerance) {
      auto out = assemble(fine, p, k);
      out.rel_error = worst;
      return out;
    }
  }
  throw NumericalFailure("two-photon quadrature did not reach tolerance at x=" +
                             std::to_string(k.x()) + " z=" + std::to_string(k.z()),
                         worst);
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

GBilinears g_bilinears(const ModelParams& p, const Kinematics& k, const SpectralGrid& grid) {
  const auto s = spectral_bilinears(p, k, grid);
  // m_uu is real for this geometry; the modulus keeps G2 exact regardless.
  return {2.0 * s.u2 * s.u2 + 2.0 * std::norm(s.m_uu), s.u2, s.m_uu};
}

FBilinears f_bilinears(const ModelParams& p, const Kinematics& k, const PairGrid& grid) {
  const auto b = two_photon_bilinears(p, k, false, grid);
  return {b.f2, b.fg, b.rel_error};
}

TwoPhotonBilinears two_photon_bilinears(const ModelParams& p, const Kinematics& k,
                                        bool with_cutoff, const PairGrid& grid) {
  p.validate();
  auto out = converged(p.nu_max, p, k, grid);
  out.cutoff_meta.nu_max = p.nu_max;
  if (with_cutoff) {
    // Only the concurrence shift is wanted here, so the check order is skipped.
    const RawPair r = raw_pair(2.0 * p.nu_max, k, grid.panels_per_half_period, grid.order);
    const auto doubled = assemble(r, p, k);
    out.cutoff_meta.evaluated = true;
    out.cutoff_meta.concurrence_at_double = concurrence_from(doubled);
    out.cutoff_meta.sensitivity =
        std::abs(out.cutoff_meta.concurrence_at_double - concurrence_from(out));
  }
  return out;
}

double concurrence_from(const TwoPhotonBilinears& b) {
  const double denom = b.f2 + b.g2;
  if (!(denom > 0.0)) throw UndefinedState("F2 + G2 vanishes: two-photon state undefined");
  return std::clamp(2.0 * std::abs(b.fg) / denom, 0.0, 1.0);
}

double concurrence_two_photon(const ModelParams& p, const Kinematics& k) {
  return concurrence_from(two_photon_bilinears(p, k));
}

ModeAmplitudes two_photon_mode_amplitudes(const PhotonMode& k1, const PhotonMode& k2,
                                          const AtomPair& atoms, double omega_t) {
  // Single-photon vertex strength sqrt(nu) (d.eps), dipoles along z.
  const double c1 = std::sqrt(k1.nu) * k1.polarization[2];
  const double c2 = std::sqrt(k2.nu) * k2.polarization[2];
  // Phase e^{-i k.x} of emitting photon k at atom x.
  auto phase = [](const PhotonMode& m, const std::array<double, 3>& x) {
    return std::polar(1.0, -m.nu * dot(m.direction, x));
  };
  const cplx p1a = phase(k1, atoms.a), p1b = phase(k1, atoms.b);
  const cplx p2a = phase(k2, atoms.a), p2b = phase(k2, atoms.b);
  // One atom emits both photons: one counter-rotating and one rotating
  // vertex, time ordered both ways.
  const cplx s = time_ordered_kernel_w(k1.nu + 1.0, k2.nu - 1.0, omega_t) +
                 time_ordered_kernel_w(k2.nu + 1.0, k1.nu - 1.0, omega_t);
  const cplx f = c1 * c2 * (p1a * p2a + p1b * p2b) * s;
  // Each atom decays once.
  const cplx g = c1 * c2 * tau(-1, k1.nu, omega_t) * tau(-1, k2.nu, omega_t) *
                 (p1a * p2b + p1b * p2a);
  return {f, g};
}

double concurrence_two_photon_mode(const PhotonMode& k1, const PhotonMode& k2,
                                   const AtomPair& atoms, double omega_t) {
  const auto m = two_photon_mode_amplitudes(k1, k2, atoms, omega_t);
  return concurrence_two_component(m.f, m.g);
}

}  // namespace twoatom
