#include "twoatom/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twoatom/errors.hpp"

namespace twoatom::quadrature {

namespace {

Rule build_rule(int n) {
  // Newton on P_n starting from the Chebyshev-like guess.
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static const std::array<Rule, kMaxOrder> rules = [] {
    std::array<Rule, kMaxOrder> out;
    out[0] = Rule{{0.0}, {2.0}};
    for (int k = 2; k <= kMaxOrder; ++k) out[k - 1] = build_rule(k);
    return out;
  }();
  if (n < 1 || n > kMaxOrder) throw ValidationError("Gauss-Legendre order out of range");
  return rules[n - 1];
}

std::vector<double> panel_breakpoints(double lo, double hi, double max_width,
                                      std::span<const double> forced) {
  if (!(hi > lo) || !(max_width > 0.0)) {
    throw ValidationError("panel_breakpoints needs lo < hi and max_width > 0");
  }
  std::vector<double> fixed{lo};
  std::vector<double> inner(forced.begin(), forced.end());
  std::sort(inner.begin(), inner.end());
  for (double f : inner) {
    if (f > lo && f < hi && f != fixed.back()) fixed.push_back(f);
  }
  fixed.push_back(hi);

  std::vector<double> out{lo};
  for (std::size_t g = 0; g + 1 < fixed.size(); ++g) {
    const double a = fixed[g];
    const double b = fixed[g + 1];
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / max_width)));
    for (std::size_t k = 1; k < n; ++k) {
      out.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(n));
    }
    out.push_back(b);
  }
  return out;
}

NodeSet composite_nodes(std::span<const double> breakpoints, int order) {
  const Rule& rule = gauss_legendre(order);
  NodeSet ns;
  if (breakpoints.size() < 2) return ns;
  const std::size_t panels = breakpoints.size() - 1;
  ns.x.reserve(panels * order);
  ns.w.reserve(panels * order);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < order; ++i) {
      ns.x.push_back(mid + half * rule.nodes[i]);
      ns.w.push_back(half * rule.weights[i]);
    }
  }
  return ns;
}

}  // namespace twoatom::quadrature
