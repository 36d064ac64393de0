// Flat key-value configuration.
//
//   # comment
//   [section]
//   key = value
//
// Keys are addressed as "section.key". Every key is optional; unknown keys
// are rejected with their line number. Numbers use '.' as decimal point
// regardless of locale. Angles in the file are in degrees (keys end in _deg).
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "windguide/scenario.hpp"

namespace windguide {

struct ConfigEntry {
    std::string value;
    int line = 0;  ///< 0 for command-line overrides
};

using ConfigMap = std::map<std::string, ConfigEntry, std::less<>>;

/// Parses config text; source names the file in error messages.
ConfigMap parse_config(std::string_view text, std::string_view source = "<config>");
ConfigMap load_config_file(const std::string& path);

/// Applies "section.key=value" on top of map.
void apply_override(ConfigMap& map, std::string_view assignment);

/// Everything a CLI invocation needs besides paths.
struct RunConfig {
    ScenarioSpec spec;
    double heading_step = 5.0 * kDegToRad;  ///< [rad]
    std::vector<double> frequencies;        ///< [rad/ft]
    bool airspeed_only = true;              ///< include the airspeed-only curve in sweeps
    unsigned threads = 0;
};

/// Builds a validated RunConfig from the map, falling back to defaults.
RunConfig build_run_config(const ConfigMap& map);

/// All recognised keys, in documentation order.
const std::vector<std::string_view>& known_config_keys();

/// Default frequency grid for sweeps [rad/ft].
std::vector<double> default_frequencies();

}  // namespace windguide
