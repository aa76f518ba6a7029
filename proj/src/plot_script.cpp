#include "twoatom/plot_script.hpp"

#include <sstream>

#include "twoatom/errors.hpp"

namespace twoatom {

PlotStyle default_style(const SweepTable& t) {
  PlotStyle s;
  if (t.spec.channel == Channel::vacuum) {
    s.title = "zero-photon concurrence";
    s.yrange = std::make_pair(0.0, 1.05);
  } else {
    s.title = "two-photon concurrence";
  }
  return s;
}

std::string emit_plot_script(const SweepTable& t, const PlotStyle& style) {
  if (t.rows.empty()) throw ValidationError("cannot plot an empty table");
  const bool by_x = t.spec.sweep_var == SweepVar::x;
  std::ostringstream os;
  os << "# gnuplot script\n";
  std::size_t errors = 0;
  for (const auto& r : t.rows) errors += r.ok() ? 0 : 1;
  if (errors > 0) os << "# " << errors << " error rows omitted\n";
  if (!style.output.empty()) {
    os << "set terminal pngcairo size 900,600\n";
    os << "set output '" << style.output << "'\n";
  }
  if (!style.title.empty()) os << "set title '" << style.title << "'\n";
  os << "set xlabel '" << (by_x ? "x = r/ct" : "z = Omega r/c") << "'\n";
  os << "set ylabel 'concurrence'\n";
  if (style.yrange) {
    os << "set yrange [" << format_double(style.yrange->first) << ':'
       << format_double(style.yrange->second) << "]\n";
  }
  os << "set key top right\n";

  const auto& fixed = t.spec.fixed_values;
  for (std::size_t c = 0; c < fixed.size(); ++c) {
    os << "$curve" << c << " << EOD\n";
    for (const auto& r : t.rows) {
      if (r.curve != static_cast<int>(c) || !r.ok()) continue;
      os << format_double(by_x ? r.x : r.z) << ' ' << format_double(r.concurrence) << '\n';
    }
    os << "EOD\n";
  }
  os << "plot ";
  for (std::size_t c = 0; c < fixed.size(); ++c) {
    if (c > 0) os << ", \\\n     ";
    os << "$curve" << c << " using 1:2 with lines lw 2 dt " << (c % 3) + 1 << " lc rgb 'black'"
       << " title '" << (by_x ? "z = " : "Omega t = ") << format_double(fixed[c]) << "'";
  }
  os << '\n';
  return os.str();
}

}  // namespace twoatom
