#pragma once

// Data-parallel inner loops of the mode sums.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant compiled in its own translation unit. The variant is chosen at
// runtime from the CPU; TWOATOM_ISA=scalar in the environment forces the
// reference path. Within one ISA every reduction runs in a fixed order, so
// results are bitwise reproducible.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include "twoatom/quadrature.hpp"

namespace twoatom::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Best supported ISA, unless overridden by TWOATOM_ISA.
Isa active_isa();

/// Per-node quantities of the spectral quadrature, structure-of-arrays.
/// Times are in units of 1/Omega, frequencies in units of Omega.
struct SpectralNodes {
  double omega_t = 0.0;
  double z = 0.0;
  std::vector<double> nu;
  std::vector<double> weight;  // quadrature weight * nu^3
  std::vector<double> tm_re, tm_im;  // tau^-(nu) = int_0^T e^{i(nu-1)t} dt
  std::vector<double> tp_re, tp_im;  // tau^+(nu) = int_0^T e^{i(nu+1)t} dt
  std::vector<double> ph_re, ph_im;  // e^{i nu T}
  std::vector<double> inv_detune;    // 1 / (nu - 1)
  std::vector<double> ang;           // angular kernel at kappa = nu z

  std::size_t size() const { return nu.size(); }
};

/// Throws ValidationError if a node sits exactly on nu = 1.
SpectralNodes build_nodes(const quadrature::NodeSet& ns, double omega_t, double z);

/// Weighted sums of the six single-photon bilinear integrands (without the
/// common prefactor), together with their L1 norms.
struct SpectralSums {
  double u2 = 0.0;       // sum w |tau-|^2
  double v2 = 0.0;       // sum w |tau+|^2
  double m_uu = 0.0;     // sum w |tau-|^2 A
  double m_vv = 0.0;     // sum w |tau+|^2 A
  std::complex<double> l_cross;  // sum w tau- conj(tau+) A
  std::complex<double> uv_same;  // sum w tau- conj(tau+)
  double abs_m_uu = 0.0;
  double abs_m_vv = 0.0;
  double abs_l_cross = 0.0;
  double abs_uv_same = 0.0;
};

/// Double sums over node pairs (i, j) of the two-photon integrands:
///   f2 = sum w_i w_j |S_ij|^2 2 (1 + A_i A_j)
///   fg = sum w_i w_j S_ij conj(tau-_i tau-_j) 2 (A_i + A_j)
/// with S_ij = W(nu_i + 1, nu_j - 1) + W(nu_j + 1, nu_i - 1).
struct PairSums {
  double f2 = 0.0;
  std::complex<double> fg;
};

SpectralSums spectral_sums(const SpectralNodes& n, Isa isa);
PairSums pair_sums(const SpectralNodes& n, Isa isa);

inline SpectralSums spectral_sums(const SpectralNodes& n) { return spectral_sums(n, active_isa()); }
inline PairSums pair_sums(const SpectralNodes& n) { return pair_sums(n, active_isa()); }

namespace scalar {
SpectralSums spectral_sums(const SpectralNodes& n);
PairSums pair_sums(const SpectralNodes& n);
}  // namespace scalar

namespace avx2 {
SpectralSums spectral_sums(const SpectralNodes& n);
PairSums pair_sums(const SpectralNodes& n);
}  // namespace avx2

}  // namespace twoatom::kernels
