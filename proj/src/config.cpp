#include "windguide/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "windguide/error.hpp"

namespace windguide {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(std::string_view key, const ConfigEntry& e) {
    std::string out = "key '" + std::string(key) + "'";
    if (e.line > 0) out += " (line " + std::to_string(e.line) + ")";
    return out;
}

const std::vector<std::string_view> kKeys = {
    "scenario.kind",
    "scenario.flight_time",
    "scenario.sim_rate",
    "scenario.output_rate",
    "scenario.altitude_ft",
    "scenario.initial_speed",
    "scenario.initial_heading_deg",
    "scenario.heading_step_deg",
    "scenario.frequencies",
    "scenario.airspeed_only",
    "scenario.threads",
    "normalization.v_n",
    "normalization.mass",
    "normalization.gravity",
    "normalization.wing_area",
    "aircraft.cd0",
    "aircraft.k_induced",
    "aircraft.rho_bar",
    "aircraft.cl_min",
    "aircraft.cl_max",
    "aircraft.cl_cruise",
    "aircraft.p_min",
    "aircraft.p_max",
    "aircraft.mu_max_deg",
    "aircraft.p_rate_max",
    "aircraft.cl_rate_max",
    "aircraft.mu_rate_max",
    "aircraft.v_bar_min",
    "aircraft.v_bar_max",
    "guidance.dt_update",
    "guidance.dv_max",
    "guidance.dpsi_max_deg",
    "guidance.fd_step_v",
    "guidance.fd_step_psi",
    "guidance.levenberg_lambda0",
    "wind.kind",
    "wind.w_m",
    "wind.psi_w_deg",
    "wind.omega_w",
    "wind.phase_deg",
    "wind.ou_sigma",
    "wind.ou_tau",
    "wind.ou_clock_hz",
    "wind.seed",
    "tracking.k_v",
    "tracking.k_psi",
    "tracking.k_gamma",
};

bool is_known(std::string_view key) {
    return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

void insert(ConfigMap& map, std::string key, std::string value, int line, std::string_view source) {
    if (!is_known(key)) {
        std::string msg = std::string(source) + ": unknown key '" + key + "'";
        if (line > 0) msg += " at line " + std::to_string(line);
        fail(ErrorClass::config, msg);
    }
    map.insert_or_assign(std::move(key), ConfigEntry{std::move(value), line});
}

double parse_number(std::string_view key, const ConfigEntry& e) {
    const std::string_view text = trim(e.value);
    double out = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        fail(ErrorClass::config, where(key, e) + ": '" + e.value + "' is not a number");
    }
    return out;
}

class Reader {
public:
    explicit Reader(const ConfigMap& map) : map_(map) {}

    void number(std::string_view key, double& target) const {
        if (auto it = map_.find(key); it != map_.end()) target = parse_number(key, it->second);
    }
    void degrees(std::string_view key, double& target) const {
        if (auto it = map_.find(key); it != map_.end())
            target = parse_number(key, it->second) * kDegToRad;
    }
    bool has(std::string_view key) const { return map_.find(key) != map_.end(); }

    const ConfigEntry* entry(std::string_view key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

private:
    const ConfigMap& map_;
};

bool parse_bool(std::string_view key, const ConfigEntry& e) {
    const std::string_view v = trim(e.value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(ErrorClass::config, where(key, e) + ": '" + e.value + "' is not a boolean");
}

template <typename Parse>
auto parse_enum(std::string_view key, const ConfigEntry& e, Parse parse) {
    try {
        return parse(trim(e.value));
    } catch (const Error& err) {
        fail(ErrorClass::config, where(key, e) + ": " + err.what());
    }
}

std::vector<double> parse_list(std::string_view key, const ConfigEntry& e) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        if (!item.empty()) out.push_back(parse_number(key, ConfigEntry{std::string(item), e.line}));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (out.empty()) fail(ErrorClass::config, where(key, e) + ": empty list");
    return out;
}

}  // namespace

ConfigMap parse_config(std::string_view text, std::string_view source) {
    ConfigMap map;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                fail(ErrorClass::config, std::string(source) + ": malformed section header at line " +
                                             std::to_string(line_no));
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorClass::config, std::string(source) + ": expected 'key = value' at line " +
                                         std::to_string(line_no));
        }
        const std::string_view key = trim(line.substr(0, eq));
        std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
        insert(map, std::move(full), std::string(trim(line.substr(eq + 1))), line_no, source);
    }
    return map;
}

ConfigMap load_config_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorClass::io, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

void apply_override(ConfigMap& map, std::string_view assignment) {
    const auto eq = assignment.find('=');
    require(eq != std::string_view::npos, ErrorClass::config,
            "override '" + std::string(assignment) + "' must look like section.key=value");
    insert(map, std::string(trim(assignment.substr(0, eq))),
           std::string(trim(assignment.substr(eq + 1))), 0, "--set");
}

const std::vector<std::string_view>& known_config_keys() { return kKeys; }

std::vector<double> default_frequencies() {
    return {0.005, 0.01, 0.02, 0.03, 0.05, 0.08, 0.12, 0.2};
}

RunConfig build_run_config(const ConfigMap& map) {
    const Reader r(map);
    RunConfig cfg;
    ScenarioSpec& s = cfg.spec;

    r.number("normalization.v_n", s.basis.v_n);
    r.number("normalization.mass", s.basis.mass);
    r.number("normalization.gravity", s.basis.gravity);
    r.number("normalization.wing_area", s.basis.wing_area);
    r.number("scenario.altitude_ft", s.altitude_ft);
    s.basis.validate();

    AircraftParams& a = s.aircraft;
    a.rho_bar = normalized_density(s.basis, isa_density(s.altitude_ft));
    r.number("aircraft.cd0", a.cd0);
    r.number("aircraft.k_induced", a.k_induced);
    r.number("aircraft.rho_bar", a.rho_bar);
    r.number("aircraft.cl_min", a.cl_min);
    r.number("aircraft.cl_max", a.cl_max);
    r.number("aircraft.cl_cruise", a.cl_cruise);
    r.number("aircraft.p_min", a.p_min);
    r.number("aircraft.p_max", a.p_max);
    r.degrees("aircraft.mu_max_deg", a.mu_max);
    r.number("aircraft.p_rate_max", a.p_rate_max);
    r.number("aircraft.cl_rate_max", a.cl_rate_max);
    r.number("aircraft.mu_rate_max", a.mu_rate_max);
    a.apply_speed_rule();
    r.number("aircraft.v_bar_min", a.v_bar_min);
    r.number("aircraft.v_bar_max", a.v_bar_max);

    if (const auto* e = r.entry("scenario.kind"))
        s.kind = parse_enum("scenario.kind", *e, parse_scenario_kind);
    r.number("scenario.flight_time", s.flight_time);
    r.number("scenario.sim_rate", s.sim_rate);
    r.number("scenario.output_rate", s.output_rate);
    double initial_speed = 0.0;
    r.number("scenario.initial_speed", initial_speed);
    s.initial_state = State{};
    s.initial_state.v_bar = initial_speed > 0.0 ? s.basis.normalize(initial_speed, QuantityKind::speed)
                                                : a.endurance_speed();
    r.degrees("scenario.initial_heading_deg", s.initial_state.psi);
    r.degrees("scenario.heading_step_deg", cfg.heading_step);
    cfg.frequencies = default_frequencies();
    if (const auto* e = r.entry("scenario.frequencies")) cfg.frequencies = parse_list("scenario.frequencies", *e);
    if (const auto* e = r.entry("scenario.airspeed_only"))
        cfg.airspeed_only = parse_bool("scenario.airspeed_only", *e);
    double threads = 0.0;
    r.number("scenario.threads", threads);
    require(threads >= 0.0 && threads == std::floor(threads), ErrorClass::config,
            "scenario.threads must be a nonnegative integer");
    cfg.threads = static_cast<unsigned>(threads);

    r.number("guidance.dt_update", s.guidance.dt_update);
    r.number("guidance.dv_max", s.guidance.dv_max);
    r.degrees("guidance.dpsi_max_deg", s.guidance.dpsi_max);
    r.number("guidance.fd_step_v", s.guidance.fd_step_v);
    r.number("guidance.fd_step_psi", s.guidance.fd_step_psi);
    r.number("guidance.levenberg_lambda0", s.guidance.levenberg_lambda0);

    if (const auto* e = r.entry("wind.kind")) s.wind.kind = parse_enum("wind.kind", *e, parse_wind_kind);
    r.number("wind.w_m", s.wind.w_m);
    r.degrees("wind.psi_w_deg", s.wind.psi_w);
    r.number("wind.omega_w", s.wind.omega_w);
    r.degrees("wind.phase_deg", s.wind.phase);
    r.number("wind.ou_sigma", s.wind.ou_sigma);
    r.number("wind.ou_tau", s.wind.ou_tau);
    r.number("wind.ou_clock_hz", s.wind.ou_clock_hz);
    if (const auto* e = r.entry("wind.seed")) {
        const std::string_view text = trim(e->value);
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
        require(ec == std::errc{} && ptr == text.data() + text.size() && !text.empty(),
                ErrorClass::config, where("wind.seed", *e) + ": seed must be a nonnegative integer");
        s.wind.seed = seed;
    }

    r.number("tracking.k_v", s.gains.k_v);
    r.number("tracking.k_psi", s.gains.k_psi);
    r.number("tracking.k_gamma", s.gains.k_gamma);

    try {
        s.validate();
    } catch (const Error& e) {
        fail(ErrorClass::config, std::string("invalid configuration: ") + e.what());
    }
    return cfg;
}

}  // namespace windguide
