#pragma once

// Reference values by brute-force adaptive quadrature. Deliberately
// independent of the library's closed forms.

#include <complex>

namespace oracle {

/// Si and Ci from their defining integrals, integrated panel by panel with
/// adaptive Gauss-Kronrod.
struct SiCi {
  double si;
  double ci;
};
SiCi si_ci(double y);

/// Ei(iy) = Ci(|y|) + i (Si(y) + pi/2 sign y) built from si_ci above.
std::complex<double> ei_imag(double y);

/// I(x, z) = I+ + I- from the time-integral representation, reduced to a
/// single principal-value integral over s in [0, Omega t].
std::complex<double> exchange_integral(double x, double z);
/// Same with Omega t given directly.
std::complex<double> exchange_integral_t(double omega_t, double z);

/// int_0^T e^{iwt} dt by quadrature.
std::complex<double> phase_integral(double w, double t);

/// W(a, b) = int_0^T dt1 e^{ia t1} int_0^{t1} dt2 e^{ib t2} by nested quadrature.
std::complex<double> nested_w(double a, double b, double t);

/// (3/8pi) int dOmega (1 - kz^2) e^{i kappa ky} by 2D Gauss-Legendre.
double angular_kernel(double kappa, int n = 96);

}  // namespace oracle
