#pragma once

#include <span>
#include <vector>

namespace twoatom::quadrature {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

inline constexpr int kMaxOrder = 32;

/// n-point Gauss-Legendre rule, 1 <= n <= kMaxOrder. Built once per order.
const Rule& gauss_legendre(int n);

/// Breakpoints covering [lo, hi]: every forced point inside (lo, hi) is a
/// breakpoint, and each gap between consecutive breakpoints is split into
/// equal panels no wider than max_width.
std::vector<double> panel_breakpoints(double lo, double hi, double max_width,
                                      std::span<const double> forced = {});

struct NodeSet {
  std::vector<double> x;
  std::vector<double> w;
};

/// Composite rule: an n-point Gauss-Legendre rule on every panel.
NodeSet composite_nodes(std::span<const double> breakpoints, int order);

}  // namespace twoatom::quadrature
