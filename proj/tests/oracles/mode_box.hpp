#pragma once

// Discrete mode-box brute force: photons on frequency shells of width dnu,
// an explicit direction grid and two explicit transverse polarizations,
// time integrals by nested trapezoid sums. Nothing here uses the library's
// closed forms or kernels.

#include <complex>

namespace oracle {

struct ModeBoxConfig {
  double dnu = 0.01;
  double nu_max = 10.0;
  int n_theta = 64;   // Gauss-Legendre in cos(theta)
  int n_phi = 128;    // uniform in phi
  double dt = 0.01;   // Richardson-combined with dt/2
  double alpha = 7.2973525693e-3;
  double dipole_strength = 5e-3;
};

struct ModeBoxResult {
  double u2 = 0.0;
  double v2 = 0.0;
  std::complex<double> m_uu;      // sum u_B u_A*
  std::complex<double> m_vv;      // sum v_A v_B*
  std::complex<double> l_cross;   // sum u_A v_B*
  std::complex<double> l_cross_swapped;  // sum u_B v_A*
  std::complex<double> uv_same;   // sum u_A v_A*
  double f2 = 0.0;
  double g2 = 0.0;
  std::complex<double> fg;
};

/// Atoms at the origin and at z along y (units c/Omega), dipoles along z.
ModeBoxResult mode_box(double x, double z, const ModeBoxConfig& cfg = {});

}  // namespace oracle
