#include "twoatom/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twoatom/errors.hpp"

namespace twoatom::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 200;

}  // namespace

SiCi si_ci_series(double y) {
  // With t_n = y^n/n! and sign (-1)^floor(n/2):
  //   Si = sum over odd n of sign t_n / n
  //   Ci = gamma + ln y + sum over even n >= 2 of sign t_n / n
  double si = 0.0;
  double ci = 0.0;
  double t = 1.0;
  for (int n = 1; n < kMaxIter; ++n) {
    t *= y / n;
    const double term = ((n / 2) % 2 == 0 ? t : -t) / n;
    if (n % 2 == 1) {
      si += term;
    } else {
      ci += term;
    }
    if (t < 1e-17 * std::min(std::abs(si), 1.0)) break;
  }
  return {si, kEulerGamma + std::log(y) + ci, EiMethod::series};
}

SiCi si_ci_continued_fraction(double y) {
  // Modified Lentz on E1(iy) = e^{-iy} / (1 + iy - 1^2/(3 + iy - 2^2/(5 + iy - ...)))
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, y);
  C c = 1.0 / tiny;
  C d = 1.0 / b;
  C h = d;
  int i = 2;
  for (; i < kMaxIter; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  if (i == kMaxIter) {
    throw NumericalFailure("si_ci continued fraction did not converge at y=" + std::to_string(y),
                           0.0);
  }
  h *= C(std::cos(y), -std::sin(y));
  return {std::numbers::pi / 2 + h.imag(), -h.real(), EiMethod::continued_fraction};
}

SiCi si_ci_asymptotic(double y) {
  // Si = pi/2 - f cos y - g sin y, Ci = f sin y - g cos y with
  // f ~ (1/y) sum (-1)^k (2k)!/y^2k, g ~ (1/y^2) sum (-1)^k (2k+1)!/y^2k.
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double f = 0.0;
  double g = 0.0;
  double tf = 1.0;  // (2k)!/y^2k
  double tg = 1.0;  // (2k+1)!/y^2k
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kMaxIter; ++k) {
    const double mag = std::abs(tf) + std::abs(tg);
    if (mag > prev) break;  // past the smallest term
    const double s = (k % 2 == 0) ? 1.0 : -1.0;
    f += s * tf;
    g += s * tg;
    if (mag < kEps * (std::abs(f) + std::abs(g))) break;
    prev = mag;
    tf *= (2.0 * k + 1.0) * (2.0 * k + 2.0) * inv2;
    tg *= (2.0 * k + 2.0) * (2.0 * k + 3.0) * inv2;
  }
  f *= inv;
  g *= inv2;
  const double cs = std::cos(y);
  const double sn = std::sin(y);
  return {std::numbers::pi / 2 - f * cs - g * sn, f * sn - g * cs, EiMethod::asymptotic};
}

SiCi si_ci(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw DomainError("si_ci requires finite y > 0, got " + std::to_string(y));
  }
  if (y < kSeriesLimit) return si_ci_series(y);
  if (y < kAsymptoticLimit) return si_ci_continued_fraction(y);
  return si_ci_asymptotic(y);
}

EiValue ei_imag_eval(double y) {
  if (y == 0.0 || !std::isfinite(y)) {
    throw DomainError("Ei(iy) is logarithmically singular at y = 0");
  }
  const SiCi sc = si_ci(std::abs(y));
  const double im = sc.si + std::numbers::pi / 2;
  const std::complex<double> v(sc.ci, y > 0.0 ? im : -im);
  return {v, {0.0, y}, sc.method};
}

std::complex<double> ei_imag(double y) { return ei_imag_eval(y).value; }

}  // namespace twoatom::specfun
