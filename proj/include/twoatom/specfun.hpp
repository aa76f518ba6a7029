#pragma once

#include <complex>

namespace twoatom::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

enum class EiMethod { series, continued_fraction, asymptotic };

/// Method boundaries on |y|: power series below the first, continued
/// fraction up to the second, asymptotic expansion beyond.
inline constexpr double kSeriesLimit = 6.0;
inline constexpr double kAsymptoticLimit = 50.0;

struct SiCi {
  double si;
  double ci;
  EiMethod method;
};

struct EiValue {
  std::complex<double> value;
  std::complex<double> arg;
  EiMethod method;
};

/// Si(y) and Ci(y) for y > 0. Throws DomainError otherwise.
SiCi si_ci(double y);

/// Ei(iy) on the principal branch:
///   Ei(iy) = Ci(|y|) + i (Si(y) + pi/2 sign(y)).
/// Ei(-iy) == conj(Ei(iy)) holds bitwise. Throws DomainError at y == 0.
std::complex<double> ei_imag(double y);
EiValue ei_imag_eval(double y);

/// Individual methods, exposed so the seams can be checked directly.
SiCi si_ci_series(double y);
SiCi si_ci_continued_fraction(double y);
SiCi si_ci_asymptotic(double y);

}  // namespace twoatom::specfun
