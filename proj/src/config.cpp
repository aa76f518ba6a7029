#include "twoatom/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "twoatom/errors.hpp"

namespace twoatom {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
    if (!out.emplace(key, value).second) {
      throw ValidationError("config line " + std::to_string(lineno) + ": repeated key " + key);
    }
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path);
  return parse_config(in);
}

double parse_real(const std::string& key, const std::string& value) {
  double v = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw ValidationError(key + ": not a number: '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw ValidationError(key + ": not an integer: '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ValidationError(key + ": not a boolean: '" + value + "'");
}

void apply_config(const std::map<std::string, std::string>& cfg, SweepSpec& spec) {
  for (const auto& [key, value] : cfg) {
    if (key == "dipole_strength") {
      spec.params.dipole_strength = parse_real(key, value);
    } else if (key == "alpha") {
      spec.params.alpha = parse_real(key, value);
    } else if (key == "nu_max") {
      spec.params.nu_max = parse_real(key, value);
    } else if (key == "z_max_factor") {
      spec.params.z_max_factor = parse_real(key, value);
    } else if (key == "bilinear_scale") {
      spec.params.bilinear_scale = parse_real(key, value);
    } else if (key == "channel") {
      spec.channel = parse_channel(value);
    } else if (key == "sweep") {
      spec.sweep_var = parse_sweep_var(value);
    } else if (key == "fixed") {
      spec.fixed_values.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) spec.fixed_values.push_back(parse_real(key, trim(item)));
    } else if (key == "lo") {
      spec.lo = parse_real(key, value);
    } else if (key == "hi") {
      spec.hi = parse_real(key, value);
    } else if (key == "points") {
      spec.n_points = parse_int(key, value);
    } else if (key == "cone_refinement") {
      spec.cone_refinement = parse_bool(key, value);
    } else if (key == "cutoff_sensitivity") {
      spec.cutoff_sensitivity = parse_bool(key, value);
    } else {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }
}

}  // namespace twoatom
