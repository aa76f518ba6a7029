#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twoatom/core_model.hpp"

namespace twoatom {

enum class Channel { vacuum, two_photon };
enum class SweepVar { x, z };

std::string_view to_string(Channel c);
std::string_view to_string(SweepVar v);
/// Throws ValidationError on an unknown name.
Channel parse_channel(std::string_view s);
SweepVar parse_sweep_var(std::string_view s);

/// A family of curves. Sweeping x holds z fixed per curve; sweeping z holds
/// Omega t fixed per curve.
struct SweepSpec {
  Channel channel = Channel::vacuum;
  SweepVar sweep_var = SweepVar::x;
  std::vector<double> fixed_values;
  double lo = 0.2;
  double hi = 2.0;
  int n_points = 400;
  ModelParams params;
  /// Adds points at 1 -/+ 10^(-k/10), k = 10..120, in x (or in z / Omega t),
  /// to resolve the narrow vacuum peak at the cone.
  bool cone_refinement = false;
  /// Re-evaluate every point with the cutoff doubled and report the shift.
  bool cutoff_sensitivity = true;

  /// Throws ValidationError unless lo < hi, n_points >= 2, fixed_values is
  /// nonempty and every value is finite and positive.
  void validate() const;
};

/// fig1..fig4. Throws ValidationError on an unknown name.
SweepSpec preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Sweep values of one curve in ascending order (uniform grid plus the
/// optional cone cluster).
std::vector<double> sweep_points(const SweepSpec& s, double fixed_value);

struct SweepRow {
  Channel channel = Channel::vacuum;
  int curve = 0;
  double fixed_value = 0.0;
  double sweep_value = 0.0;
  double x = 0.0;
  double z = 0.0;
  double omega_t = 0.0;
  double concurrence = 0.0;
  /// Vacuum: amp1 = 1 + a, amp2 = b. Two-photon: amp1 = F2 + i G2, amp2 = FG.
  std::complex<double> amp1;
  std::complex<double> amp2;
  bool on_cone = false;
  double cutoff_sensitivity = 0.0;
  /// Nonempty when the point failed; the numeric fields are then meaningless.
  std::string error;

  bool ok() const { return error.empty(); }
};

struct SweepTable {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // ordered by (curve, sweep value)
};

/// Evaluates a single point. Failures become error rows.
SweepRow evaluate_point(const SweepSpec& s, int curve, double fixed_value, double sweep_value);

/// threads <= 0 picks the hardware concurrency. The result does not depend
/// on the thread count.
SweepTable run_sweep(const SweepSpec& s, int threads = 1);

void write_csv(std::ostream& os, const SweepTable& t);
std::string csv_header();
std::string format_double(double v);

}  // namespace twoatom
