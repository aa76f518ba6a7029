#include "twoatom/mode_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "twoatom/errors.hpp"

namespace twoatom {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// sin(h)/h
double sinc(double h) {
  if (std::abs(h) < 1e-4) {
    const double h2 = h * h;
    return 1.0 - h2 / 6.0 * (1.0 - h2 / 20.0);
  }
  return std::sin(h) / h;
}

// M_m(a) = int_0^T t^m e^{iat} dt for m = 0..kMoments-1.
constexpr int kMoments = 8;

std::array<cplx, kMoments> moments(double a, double t) {
  std::array<cplx, kMoments> m{};
  if (std::abs(a) * t <= 1.0) {
    // sum_k (ia)^k T^{m+k+1} / (k! (m+k+1))
    for (int order = 0; order < kMoments; ++order) {
      cplx sum = 0.0;
      cplx pk = 1.0;  // (iaT)^k / k!
      for (int k = 0; k < 40; ++k) {
        const cplx term = pk / static_cast<double>(order + k + 1);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        pk *= kI * a * t / static_cast<double>(k + 1);
      }
      m[order] = sum * std::pow(t, order + 1);
    }
    return m;
  }
  const cplx e = std::exp(kI * a * t);
  m[0] = phase_integral(a, t);
  double tp = 1.0;
  for (int order = 1; order < kMoments; ++order) {
    tp *= t;
    m[order] = (tp * e - static_cast<double>(order) * m[order - 1]) / (kI * a);
  }
  return m;
}

}  // namespace

cplx phase_integral(double w, double omega_t) {
  // (e^{iwT} - 1)/(iw) = e^{iwT/2} T sinc(wT/2)
  const double h = 0.5 * w * omega_t;
  return std::polar(omega_t * sinc(h), h);
}

cplx tau(int sign, double nu, double omega_t) {
  return phase_integral(nu + (sign >= 0 ? 1.0 : -1.0), omega_t);
}

double angular_kernel(double kappa) {
  const double k = std::abs(kappa);
  if (k < 1.0) {
    // 3/2 [j0 - j1/k] with j0 = sum (-1)^n k^2n/(2n+1)!,
    // j1/k = sum (-1)^n 2(n+1) k^2n/(2n+3)!
    const double k2 = k * k;
    double sum = 0.0;
    double p = 1.0;  // (-1)^n k^2n
    double f1 = 1.0;  // (2n+1)!
    double f3 = 6.0;  // (2n+3)!
    for (int n = 0; n < 12; ++n) {
      sum += p * (1.0 / f1 - 2.0 * (n + 1) / f3);
      p *= -k2;
      f1 *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
      f3 *= (2.0 * n + 4.0) * (2.0 * n + 5.0);
    }
    return 1.5 * sum;
  }
  const double s = std::sin(k);
  const double c = std::cos(k);
  return 1.5 * (s / k - s / (k * k * k) + c / (k * k));
}

cplx time_ordered_kernel_w(double a, double b, double omega_t) {
  if (omega_t == 0.0) return 0.0;
  if (std::abs(b) * omega_t < 1e-3) {
    // (e^{ibt}-1)/(ib) = sum_n (ib)^n t^{n+1}/(n+1)!
    const auto m = moments(a, omega_t);
    cplx sum = 0.0;
    cplx c = 1.0;
    for (int n = 0; n + 1 < kMoments; ++n) {
      c /= static_cast<double>(n + 1);
      sum += c * m[n + 1];
      c *= kI * b;
    }
    return sum;
  }
  return (phase_integral(a + b, omega_t) - phase_integral(a, omega_t)) / (kI * b);
}

const char* to_string(BilinearKind k) {
  switch (k) {
    case BilinearKind::u2: return "u2";
    case BilinearKind::v2: return "v2";
    case BilinearKind::m_uu: return "m_uu";
    case BilinearKind::m_vv: return "m_vv";
    case BilinearKind::l_cross: return "l_cross";
    case BilinearKind::uv_same: return "uv_same";
  }
  return "?";
}

bool is_cross_atom(BilinearKind k) {
  return k == BilinearKind::m_uu || k == BilinearKind::m_vv || k == BilinearKind::l_cross;
}

double bilinear_prefactor(const ModelParams& p) {
  return 2.0 * p.alpha * p.dipole_strength * p.dipole_strength / (3.0 * std::numbers::pi) *
         p.bilinear_scale;
}

cplx BilinearSet::get(BilinearKind k) const {
  switch (k) {
    case BilinearKind::u2: return u2;
    case BilinearKind::v2: return v2;
    case BilinearKind::m_uu: return m_uu;
    case BilinearKind::m_vv: return m_vv;
    case BilinearKind::l_cross: return l_cross;
    case BilinearKind::uv_same: return uv_same;
  }
  return 0.0;
}

quadrature::NodeSet spectral_node_set(double nu_max, double omega_t, double z,
                                      double panels_per_half_period, int order) {
  const double scale = std::min({std::numbers::pi / omega_t, std::numbers::pi / z, 1.0});
  const double forced[] = {1.0};
  const auto bp = quadrature::panel_breakpoints(0.0, nu_max, scale / panels_per_half_period, forced);
  return quadrature::composite_nodes(bp, order);
}

namespace {

struct RawBilinears {
  std::array<cplx, 6> value;
  std::array<double, 6> l1;
};

RawBilinears raw_bilinears(double nu_max, const Kinematics& k, double panels, int order) {
  const auto ns = spectral_node_set(nu_max, k.omega_t(), k.z(), panels, order);
  const auto nodes = kernels::build_nodes(ns, k.omega_t(), k.z());
  const auto s = kernels::spectral_sums(nodes);
  RawBilinears r;
  r.value = {s.u2, s.v2, s.m_uu, s.m_vv, s.l_cross, s.uv_same};
  r.l1 = {s.u2, s.v2, s.abs_m_uu, s.abs_m_vv, s.abs_l_cross, s.abs_uv_same};
  return r;
}

BilinearSet bilinears_at(double nu_max, const ModelParams& p, const Kinematics& k,
                         const SpectralGrid& grid) {
  double panels = grid.panels_per_half_period;
  double worst = 0.0;
  for (int level = 0; level <= grid.max_refinements; ++level, panels *= 2.0) {
    const auto fine = raw_bilinears(nu_max, k, panels, grid.order);
    const auto coarse = raw_bilinears(nu_max, k, panels, grid.check_order);
    worst = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double scale = fine.l1[i] > 0.0 ? fine.l1[i] : 1.0;
      worst = std::max(worst, std::abs(fine.value[i] - coarse.value[i]) / scale);
    }
    if (worst <= grid.tolerance) {
      const double c = bilinear_prefactor(p);
      BilinearSet out;
      out.at = k;
      out.u2 = c * fine.value[0].real();
      out.v2 = c * fine.value[1].real();
      out.m_uu = c * fine.value[2];
      out.m_vv = c * fine.value[3];
      out.l_cross = c * fine.value[4];
      out.uv_same = c * fine.value[5];
      out.rel_error = worst;
      return out;
    }
  }
  throw NumericalFailure("spectral bilinear quadrature did not reach tolerance at x=" +
                             std::to_string(k.x()) + " z=" + std::to_string(k.z()),
                         worst);
}

}  // namespace

BilinearSet spectral_bilinears(const ModelParams& p, const Kinematics& k, const SpectralGrid& grid) {
  p.validate();
  return bilinears_at(p.nu_max, p, k, grid);
}

QuadratureResult spectral_bilinear(BilinearKind kind, const ModelParams& p, const Kinematics& k,
                                   const SpectralGrid& grid) {
  const auto set = spectral_bilinears(p, k, grid);
  return {set.get(kind), set.rel_error};
}

BilinearCutoffReport bilinear_cutoff_report(const ModelParams& p, const Kinematics& k,
                                            const SpectralGrid& grid) {
  p.validate();
  BilinearCutoffReport r;
  r.base = bilinears_at(p.nu_max, p, k, grid);
  r.doubled = bilinears_at(2.0 * p.nu_max, p, k, grid);
  for (std::size_t i = 0; i < kAllBilinearKinds.size(); ++i) {
    const auto kind = kAllBilinearKinds[i];
    const cplx a = r.base.get(kind);
    const cplx b = r.doubled.get(kind);
    const double denom = std::abs(a);
    r.rel_shift[i] = denom > 0.0 ? std::abs(b - a) / denom : std::abs(b - a);
    r.cutoff_dependent[i] = !is_cross_atom(kind) || r.rel_shift[i] >= 0.02;
  }
  return r;
}

}  // namespace twoatom
