#include "twoatom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "twoatom/errors.hpp"
#include "twoatom/two_photon_channel.hpp"
#include "twoatom/vacuum_channel.hpp"

namespace twoatom {

std::string_view to_string(Channel c) { return c == Channel::vacuum ? "vacuum" : "two_photon"; }
std::string_view to_string(SweepVar v) { return v == SweepVar::x ? "x" : "z"; }

Channel parse_channel(std::string_view s) {
  if (s == "vacuum") return Channel::vacuum;
  if (s == "two_photon") return Channel::two_photon;
  throw ValidationError("unknown channel '" + std::string(s) + "' (vacuum, two_photon)");
}

SweepVar parse_sweep_var(std::string_view s) {
  if (s == "x") return SweepVar::x;
  if (s == "z") return SweepVar::z;
  throw ValidationError("unknown sweep variable '" + std::string(s) + "' (x, z)");
}

void SweepSpec::validate() const {
  params.validate();
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo < hi)) {
    throw ValidationError("sweep range needs 0 < lo < hi");
  }
  if (n_points < 2) throw ValidationError("sweep needs at least 2 points");
  if (fixed_values.empty()) throw ValidationError("sweep needs at least one curve");
  for (double v : fixed_values) {
    if (!(std::isfinite(v) && v > 0.0)) throw ValidationError("curve values must be > 0");
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4"};
  return names;
}

SweepSpec preset(std::string_view name) {
  SweepSpec s;
  if (name == "fig1" || name == "fig3") {
    s.sweep_var = SweepVar::x;
    s.fixed_values = {5.0, 10.0, 15.0};
    s.lo = 0.2;
    s.hi = 2.0;
  } else if (name == "fig2" || name == "fig4") {
    s.sweep_var = SweepVar::z;
    s.fixed_values = {6.0, 9.0, 12.0};
    s.lo = 1.0;
    s.hi = 20.0;
  } else {
    throw ValidationError("unknown preset '" + std::string(name) + "'");
  }
  s.n_points = 400;
  s.channel = (name == "fig1" || name == "fig2") ? Channel::vacuum : Channel::two_photon;
  s.cone_refinement = s.channel == Channel::vacuum;
  return s;
}

std::vector<double> sweep_points(const SweepSpec& s, double fixed_value) {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(s.n_points) + 240);
  const double step = (s.hi - s.lo) / (s.n_points - 1);
  for (int i = 0; i < s.n_points; ++i) pts.push_back(i + 1 == s.n_points ? s.hi : s.lo + i * step);
  if (s.cone_refinement) {
    // The cone sits at x = 1, or at z = Omega t when sweeping z.
    const double cone = s.sweep_var == SweepVar::x ? 1.0 : fixed_value;
    for (int k = 10; k <= 120; ++k) {
      const double d = std::pow(10.0, -k / 10.0);
      for (double v : {cone * (1.0 - d), cone * (1.0 + d)}) {
        if (v >= s.lo && v <= s.hi) pts.push_back(v);
      }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  }
  return pts;
}

namespace {

Kinematics point_kinematics(const SweepSpec& s, double fixed_value, double sweep_value) {
  if (s.sweep_var == SweepVar::x) return Kinematics(sweep_value, fixed_value);
  return Kinematics::from_omega_t(fixed_value, sweep_value);
}

ModelParams doubled_cutoff(const ModelParams& p) {
  ModelParams d = p;
  d.nu_max = 2.0 * p.nu_max;
  if (d.z_max_factor) d.z_max_factor = 2.0 * *p.z_max_factor;
  return d;
}

}  // namespace

SweepRow evaluate_point(const SweepSpec& s, int curve, double fixed_value, double sweep_value) {
  SweepRow row;
  row.channel = s.channel;
  row.curve = curve;
  row.fixed_value = fixed_value;
  row.sweep_value = sweep_value;
  try {
    const Kinematics k = point_kinematics(s, fixed_value, sweep_value);
    row.x = k.x();
    row.z = k.z();
    row.omega_t = k.omega_t();
    row.on_cone = k.on_cone();
    if (s.channel == Channel::vacuum) {
      const auto v = evaluate_vacuum(s.params, k);
      row.concurrence = v.concurrence;
      row.amp1 = 1.0 + v.a;
      row.amp2 = v.b;
      if (s.cutoff_sensitivity) {
        row.cutoff_sensitivity =
            std::abs(concurrence_vacuum(doubled_cutoff(s.params), k) - v.concurrence);
      }
    } else {
      const auto b = two_photon_bilinears(s.params, k, s.cutoff_sensitivity);
      row.concurrence = concurrence_from(b);
      row.amp1 = {b.f2, b.g2};
      row.amp2 = b.fg;
      row.cutoff_sensitivity = b.cutoff_meta.sensitivity;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

SweepTable run_sweep(const SweepSpec& s, int threads) {
  s.validate();
  struct Job {
    int curve;
    double fixed;
    double value;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < s.fixed_values.size(); ++c) {
    for (double v : sweep_points(s, s.fixed_values[c])) {
      jobs.push_back({static_cast<int>(c), s.fixed_values[c], v});
    }
  }
  SweepTable t;
  t.spec = s;
  t.rows.resize(jobs.size());
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(jobs.size()));

  // Each row is written to its own slot, so completion order is irrelevant.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      t.rows[i] = evaluate_point(s, jobs[i].curve, jobs[i].fixed, jobs[i].value);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return t;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_header() {
  return "channel,x,z,omega_t,concurrence,amp1_re,amp1_im,amp2_re,amp2_im,on_cone_flag,"
         "cutoff_sensitivity,error";
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n' ? ' ' : c);
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const SweepTable& t) {
  os << csv_header() << '\n';
  for (const auto& r : t.rows) {
    os << to_string(r.channel) << ',';
    if (r.ok()) {
      os << format_double(r.x) << ',' << format_double(r.z) << ',' << format_double(r.omega_t)
         << ',' << format_double(r.concurrence) << ',' << format_double(r.amp1.real()) << ','
         << format_double(r.amp1.imag()) << ',' << format_double(r.amp2.real()) << ','
         << format_double(r.amp2.imag()) << ',' << (r.on_cone ? 1 : 0) << ','
         << format_double(r.cutoff_sensitivity) << ",\n";
    } else {
      // Coordinates from the grid; the point itself failed.
      const bool by_x = t.spec.sweep_var == SweepVar::x;
      const double x = by_x ? r.sweep_value : r.sweep_value / r.fixed_value;
      const double z = by_x ? r.fixed_value : r.sweep_value;
      os << format_double(x) << ',' << format_double(z) << ',' << format_double(z / x)
         << ",,,,,,,," << csv_quote(r.error) << '\n';
    }
  }
}

}  // namespace twoatom
