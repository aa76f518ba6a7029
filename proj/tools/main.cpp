// Command-line front end: figure presets, custom sweeps and single points.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "twoatom/config.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/mode_kernels.hpp"
#include "twoatom/plot_script.hpp"
#include "twoatom/sweep.hpp"
#include "twoatom/two_photon_channel.hpp"
#include "twoatom/vacuum_channel.hpp"

using namespace twoatom;

namespace {

struct Common {
  std::string out;
  std::string config;
  std::optional<double> nu_max;
  std::optional<int> points;
  bool emit_plot = false;
  std::string plot_out;
  int threads = 0;
  bool no_cutoff = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out,-o", c.out, "CSV output path (default: stdout)");
  app->add_option("--config", c.config, "key=value config file");
  app->add_option("--nu-max", c.nu_max, "UV cutoff omega_max / Omega");
  app->add_option("--points", c.points, "uniform grid points per curve");
  app->add_flag("--emit-plot", c.emit_plot, "also write a gnuplot script");
  app->add_option("--plot-out", c.plot_out, "plot script path (default: <out>.gp or plot.gp)");
  app->add_option("--threads", c.threads, "worker threads, 0 = all cores");
  app->add_flag("--no-cutoff-check", c.no_cutoff, "skip the 2 nu_max re-evaluation");
}

void apply_common(const Common& c, SweepSpec& s) {
  if (!c.config.empty()) apply_config(load_config(c.config), s);
  if (c.nu_max) s.params.nu_max = *c.nu_max;
  if (c.points) s.n_points = *c.points;
  if (c.no_cutoff) s.cutoff_sensitivity = false;
}

int run_table(const SweepSpec& spec, const Common& c) {
  const SweepTable t = run_sweep(spec, c.threads);
  if (c.out.empty()) {
    write_csv(std::cout, t);
  } else {
    std::ofstream f(c.out);
    if (!f) throw ValidationError("cannot write " + c.out);
    write_csv(f, t);
  }
  if (c.emit_plot) {
    std::string path = c.plot_out;
    if (path.empty()) path = c.out.empty() ? "plot.gp" : c.out + ".gp";
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write " + path);
    f << emit_plot_script(t, default_style(t));
  }
  std::size_t errors = 0;
  for (const auto& r : t.rows) errors += r.ok() ? 0 : 1;
  if (errors > 0) std::cerr << errors << " of " << t.rows.size() << " points failed\n";
  return 0;
}

void print_c(const char* name, std::complex<double> v) {
  std::printf("%-14s %s %s\n", name, format_double(v.real()).c_str(),
              format_double(v.imag()).c_str());
}

void print_r(const char* name, double v) { std::printf("%-14s %s\n", name, format_double(v).c_str()); }

int run_point(const ModelParams& p, const Kinematics& k, const std::string& channel, bool cutoff) {
  print_r("x", k.x());
  print_r("z", k.z());
  print_r("omega_t", k.omega_t());
  if (channel == "vacuum" || channel == "both") {
    const auto v = evaluate_vacuum(p, k);
    print_c("I_plus", v.i_plus);
    print_c("I_minus", v.i_minus);
    print_c("a", v.a);
    print_c("b", v.b);
    print_r("on_cone", v.on_cone ? 1.0 : 0.0);
    print_r("C0", v.concurrence);
  }
  if (channel == "two_photon" || channel == "both") {
    const auto s = spectral_bilinears(p, k);
    for (auto kind : kAllBilinearKinds) print_c(to_string(kind), s.get(kind));
    const auto b = two_photon_bilinears(p, k, cutoff);
    print_r("F2", b.f2);
    print_r("G2", b.g2);
    print_c("FG", b.fg);
    print_r("rel_error", b.rel_error);
    print_r("C2", concurrence_from(b));
    if (cutoff) print_r("C2_2nu_max", b.cutoff_meta.concurrence_at_double);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence of two atoms coupled through the electromagnetic vacuum"};
  app.require_subcommand(1);

  std::array<Common, 4> fig_opts;
  std::array<CLI::App*, 4> figs{};
  for (int i = 0; i < 4; ++i) {
    const auto& name = preset_names()[i];
    figs[i] = app.add_subcommand(name, "preset sweep " + name);
    add_common(figs[i], fig_opts[i]);
  }

  Common sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "custom sweep");
  add_common(sweep, sweep_opts);
  std::string channel = "vacuum", var = "x";
  std::vector<double> fixed;
  std::optional<double> lo, hi;
  bool refine = false;
  sweep->add_option("--channel", channel, "vacuum or two_photon");
  sweep->add_option("--var", var, "x (curves at fixed z) or z (curves at fixed Omega t)");
  sweep->add_option("--fixed", fixed, "curve values")->delimiter(',');
  sweep->add_option("--lo", lo, "range start");
  sweep->add_option("--hi", hi, "range end");
  sweep->add_flag("--refine-cone", refine, "add points clustered at the light cone");

  auto* point = app.add_subcommand("point", "all amplitudes at one (x, z)");
  std::optional<double> px, pz, pt, pnu;
  std::string pchannel = "both";
  std::string pconfig;
  bool pcut = false;
  point->add_option("--x", px, "r / ct");
  point->add_option("--z", pz, "Omega r / c")->required();
  point->add_option("--omega-t", pt, "Omega t (instead of --x)");
  point->add_option("--channel", pchannel, "vacuum, two_photon or both");
  point->add_option("--nu-max", pnu, "UV cutoff");
  point->add_option("--config", pconfig, "key=value config file");
  point->add_flag("--cutoff-check", pcut, "also evaluate C2 at 2 nu_max");

  CLI11_PARSE(app, argc, argv);

  try {
    for (int i = 0; i < 4; ++i) {
      if (figs[i]->parsed()) {
        SweepSpec s = preset(preset_names()[i]);
        apply_common(fig_opts[i], s);
        return run_table(s, fig_opts[i]);
      }
    }
    if (sweep->parsed()) {
      SweepSpec s;
      s.channel = parse_channel(channel);
      s.sweep_var = parse_sweep_var(var);
      if (s.sweep_var == SweepVar::z) {
        s.lo = 1.0;
        s.hi = 20.0;
      }
      apply_common(sweep_opts, s);
      if (!fixed.empty()) s.fixed_values = fixed;
      if (lo) s.lo = *lo;
      if (hi) s.hi = *hi;
      if (refine) s.cone_refinement = true;
      return run_table(s, sweep_opts);
    }
    if (point->parsed()) {
      SweepSpec s;
      if (!pconfig.empty()) apply_config(load_config(pconfig), s);
      if (pnu) s.params.nu_max = *pnu;
      s.params.validate();
      if (px.has_value() == pt.has_value()) throw ValidationError("give exactly one of --x, --omega-t");
      const Kinematics k = px ? Kinematics(*px, *pz) : Kinematics::from_omega_t(*pt, *pz);
      if (pchannel != "vacuum" && pchannel != "two_photon" && pchannel != "both") {
        throw ValidationError("unknown channel '" + pchannel + "'");
      }
      return run_point(s.params, k, pchannel, pcut);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
