#pragma once

#include <istream>
#include <map>
#include <string>

#include "twoatom/sweep.hpp"

namespace twoatom {

/// key=value lines; '#' starts a comment, blank lines are ignored.
/// Throws ValidationError on a malformed line or a repeated key.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> load_config(const std::string& path);

/// Applies recognized keys to the spec:
///   dipole_strength, alpha, nu_max, z_max_factor, bilinear_scale,
///   channel, sweep, fixed (comma list), lo, hi, points, cone_refinement,
///   cutoff_sensitivity
/// Unknown keys and unparsable values throw ValidationError.
void apply_config(const std::map<std::string, std::string>& cfg, SweepSpec& spec);

double parse_real(const std::string& key, const std::string& value);
int parse_int(const std::string& key, const std::string& value);
bool parse_bool(const std::string& key, const std::string& value);

}  // namespace twoatom
