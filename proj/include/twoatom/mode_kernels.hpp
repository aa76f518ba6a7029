#pragma once

#include <array>
#include <complex>

#include "twoatom/core_model.hpp"
#include "twoatom/kernels/kernels.hpp"
#include "twoatom/quadrature.hpp"

namespace twoatom {

/// int_0^T e^{i w t} dt, stable for every w (including w -> 0).
std::complex<double> phase_integral(double w, double omega_t);

/// Time content of the single-photon vertex:
///   tau^s(nu) = int_0^{Omega t} e^{i (nu + s) t'} dt',  s = +1 or -1.
/// u-type amplitudes carry s = -1 (resonant at nu = 1), v-type s = +1.
std::complex<double> tau(int sign, double nu, double omega_t);

/// (3 / 8 pi) int dOmega_k (1 - kz^2) e^{i kappa k.y}, normalized to 1 at 0:
/// 3/2 [sin k / k - sin k / k^3 + cos k / k^2].
double angular_kernel(double kappa);

/// W(a, b) = int_0^T dt1 e^{i a t1} (e^{i b t1} - 1) / (i b), the nested
/// time-ordered integral behind every theta(t1 - t2) product.
std::complex<double> time_ordered_kernel_w(double a, double b, double omega_t);

enum class BilinearKind { u2, v2, m_uu, m_vv, l_cross, uv_same };
inline constexpr std::array<BilinearKind, 6> kAllBilinearKinds{
    BilinearKind::u2,   BilinearKind::v2,      BilinearKind::m_uu,
    BilinearKind::m_vv, BilinearKind::l_cross, BilinearKind::uv_same};

const char* to_string(BilinearKind k);
/// Cross-atom kinds carry the angular kernel at kappa = nu z.
bool is_cross_atom(BilinearKind k);

/// 2 alpha D^2 / (3 pi) times bilinear_scale: the constant in front of every
/// single-photon mode sum int dnu nu^3 (...).
double bilinear_prefactor(const ModelParams& p);

/// The six mode-summed single-photon bilinears at one point.
struct BilinearSet {
  double u2 = 0.0;
  double v2 = 0.0;
  std::complex<double> m_uu;
  std::complex<double> m_vv;
  std::complex<double> l_cross;
  std::complex<double> uv_same;
  Kinematics at{1.0, 1.0};
  /// Largest relative error estimate over the six kinds (relative to each
  /// integrand's L1 norm).
  double rel_error = 0.0;

  std::complex<double> get(BilinearKind k) const;
};

struct QuadratureResult {
  std::complex<double> value;
  double rel_error = 0.0;
};

/// Panel policy of the single-photon quadratures.
struct SpectralGrid {
  /// Panels are no wider than min(pi/Omega t, pi/z, 1) / panels_per_half_period.
  int panels_per_half_period = 4;
  int order = 6;
  int check_order = 4;
  double tolerance = 1e-6;
  int max_refinements = 4;
};

/// Nodes on [0, nu_max] with a breakpoint at the resonance nu = 1.
quadrature::NodeSet spectral_node_set(double nu_max, double omega_t, double z,
                                      double panels_per_half_period, int order);

/// All six bilinears in one pass. Throws NumericalFailure if the estimate
/// stays above tolerance after refinement.
BilinearSet spectral_bilinears(const ModelParams& p, const Kinematics& k,
                               const SpectralGrid& grid = {});

QuadratureResult spectral_bilinear(BilinearKind kind, const ModelParams& p, const Kinematics& k,
                                   const SpectralGrid& grid = {});

/// Bilinears at nu_max and 2 nu_max. Same-atom kinds grow with the cutoff and
/// are always flagged; a cross-atom kind is flagged when it moves by >= 2%.
struct BilinearCutoffReport {
  BilinearSet base;
  BilinearSet doubled;
  std::array<double, 6> rel_shift{};
  std::array<bool, 6> cutoff_dependent{};
};

BilinearCutoffReport bilinear_cutoff_report(const ModelParams& p, const Kinematics& k,
                                            const SpectralGrid& grid = {});

}  // namespace twoatom
