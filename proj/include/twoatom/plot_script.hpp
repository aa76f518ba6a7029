#pragma once

#include <optional>
#include <string>
#include <utility>

#include "twoatom/sweep.hpp"

namespace twoatom {

struct PlotStyle {
  std::string title;
  std::string output;  // png path; empty leaves the terminal alone
  /// Unset means autoscale.
  std::optional<std::pair<double, double>> yrange;
};

/// Default style for a table: y in [0, 1.05] for the vacuum channel,
/// autoscaled for the two-photon channel.
PlotStyle default_style(const SweepTable& t);

/// Standalone gnuplot script with the data inlined, one curve per fixed
/// value, dash types solid/dashed/dotted in order. Error rows are left out
/// and counted in a comment.
std::string emit_plot_script(const SweepTable& t, const PlotStyle& style);

}  // namespace twoatom
