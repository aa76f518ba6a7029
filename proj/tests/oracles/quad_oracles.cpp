#include "quad_oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

using cplx = std::complex<double>;
using boost::math::quadrature::gauss_kronrod;
constexpr double kPi = std::numbers::pi;
constexpr double kGamma = 0.57721566490153286060651209008240243;

template <class F>
double gk(F f, double a, double b) {
  return gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-14);
}

// Adaptive integration over [a, b] split into panels no wider than w.
template <class F>
double paneled(F f, double a, double b, double w) {
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / w)));
  const double h = (b - a) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += gk(f, a + i * h, i + 1 == n ? b : a + (i + 1) * h);
  return sum;
}

template <class F>
cplx paneled_c(F f, double a, double b, double w) {
  const double re = paneled([&](double t) { return f(t).real(); }, a, b, w);
  const double im = paneled([&](double t) { return f(t).imag(); }, a, b, w);
  return {re, im};
}

}  // namespace

SiCi si_ci(double y) {
  auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
  // (cos t - 1)/t = -2 sin^2(t/2)/t avoids cancellation near 0.
  auto cosm = [](double t) {
    if (t == 0.0) return 0.0;
    const double s = std::sin(0.5 * t);
    return -2.0 * s * s / t;
  };
  const double si = paneled(sinc, 0.0, y, kPi);
  const double ci = kGamma + std::log(y) + paneled(cosm, 0.0, y, kPi);
  return {si, ci};
}

cplx ei_imag(double y) {
  const auto s = si_ci(std::abs(y));
  const double sg = y > 0 ? 1.0 : -1.0;
  return {s.ci, sg * s.si + sg * kPi / 2.0};
}

cplx exchange_integral(double x, double z) { return exchange_integral_t(z / x, z); }

cplx exchange_integral_t(double t, double z) {
  // Q(s) = (e^{-is} - e^{-i(2T - s)}) / i
  auto q = [t](double s) {
    return (std::polar(1.0, -s) - std::polar(1.0, -(2.0 * t - s))) / cplx(0.0, 1.0);
  };
  const double w = 0.25;
  if (z > t) {
    return -paneled_c([&](double s) { return q(s) / (z * z - s * s); }, 0.0, t, w);
  }
  const cplx qz = q(z);
  auto smooth = [&](double s) {
    const double d = z - s;
    if (std::abs(d) < 1e-6 * z) {
      // Removable point: limit of (Q(s) - Q(z)) / ((z - s)(z + s)).
      const cplx dq = std::polar(1.0, -z) * cplx(-1.0, 0.0) -
                      std::polar(1.0, -(2.0 * t - z)) * cplx(1.0, 0.0);
      return -dq / (2.0 * z);
    }
    return (q(s) - qz) / (d * (z + s));
  };
  cplx pv = paneled_c(smooth, 0.0, z, w);
  if (t > z) pv += paneled_c(smooth, z, t, w);
  pv += qz * std::log(std::abs((z + t) / (z - t))) / (2.0 * z);
  return -pv + cplx(0.0, kPi / (2.0 * z)) * qz;
}

cplx phase_integral(double w, double t) {
  return paneled_c([w](double s) { return std::polar(1.0, w * s); }, 0.0, t, 0.5);
}

cplx nested_w(double a, double b, double t) {
  auto inner = [b](double t1) {
    return paneled_c([b](double s) { return std::polar(1.0, b * s); }, 0.0, t1, 0.5);
  };
  return paneled_c([&](double t1) { return std::polar(1.0, a * t1) * inner(t1); }, 0.0, t, 0.5);
}

double angular_kernel(double kappa, int n) {
  // cos(theta) by Gauss-Legendre, phi by the trapezoid rule (periodic).
  const auto& nodes = boost::math::quadrature::gauss<double, 96>::abscissa();
  const auto& weights = boost::math::quadrature::gauss<double, 96>::weights();
  double sum = 0.0;
  auto term = [&](double u, double wu) {
    const double st = std::sqrt(1.0 - u * u);
    double inner = 0.0;
    for (int j = 0; j < 2 * n; ++j) {
      const double phi = 2.0 * kPi * j / (2 * n);
      inner += std::cos(kappa * st * std::sin(phi));
    }
    inner *= 2.0 * kPi / (2 * n);
    sum += wu * (1.0 - u * u) * inner;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    term(nodes[i], weights[i]);
    if (nodes[i] != 0.0) term(-nodes[i], weights[i]);
  }
  return 3.0 / (8.0 * kPi) * sum;
}

}  // namespace oracle
