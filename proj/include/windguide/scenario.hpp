// Complete flights under the reference and adjusted strategies, the average
// power measures and the heading / wind-frequency sweeps built on them.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windguide/airframe.hpp"
#include "windguide/dynamics.hpp"
#include "windguide/guidance.hpp"
#include "windguide/tracking.hpp"
#include "windguide/windfield.hpp"

namespace windguide {

enum class ScenarioKind {
    reference,               ///< constant (V*, psi0) commands
    adjusted,                ///< airspeed and heading re-optimized every update
    adjusted_airspeed_only,  ///< airspeed re-optimized, heading held at psi0
};

std::string_view to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(std::string_view text);

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::adjusted;
    NormalizationBasis basis;
    AircraftParams aircraft;
    /// Initial state; a nonpositive airspeed means "start at V*".
    State initial_state;
    double altitude_ft = 15000.0;
    double flight_time = 1200.0;  ///< [s]
    double sim_rate = 50.0;       ///< [Hz]
    double output_rate = 1.0;     ///< trajectory decimation [Hz]
    GuidanceConfig guidance;
    WindFieldParams wind;
    TrackingGains gains;

    void validate() const;
};

/// Defaults: ScanEagle-like airframe at 15,000 ft, start at V* heading north.
ScenarioSpec default_scenario();

struct TrajectorySample {
    double t = 0.0;  ///< [s]
    State state;
    Controls controls;
    VelocityCommand command;
    WindSample wind;
    WindRates wind_rates;
};

struct RunMetrics {
    double p_bar_avg = 0.0;
    /// Heading-ensemble mean; equals p_bar_avg for a single run.
    double p_bar_heading_avg = 0.0;
    std::optional<double> benefit;

    // Largest per-step control changes divided by the step, normalized.
    double max_p_rate = 0.0;
    double max_cl_rate = 0.0;
    double max_mu_rate = 0.0;
    bool bounds_respected = true;

    std::size_t steps = 0;
    std::size_t adjustments = 0;
    std::size_t adjustments_accepted = 0;
    std::size_t singular_tracking_holds = 0;
    std::size_t horizon_halvings = 0;
};

struct RunResult {
    RunMetrics metrics;
    std::vector<TrajectorySample> trajectory;
};

/// Time average over equally spaced samples by the trapezoidal rule. A
/// constant sequence returns that constant exactly.
double trapezoid_average(const std::vector<double>& samples);

RunResult run(const ScenarioSpec& spec, bool keep_trajectory = true);

struct HeadingSweepResult {
    std::vector<double> headings;  ///< [rad]
    std::vector<double> p_bar_avg;
    RunMetrics metrics;  ///< p_bar_heading_avg filled
};

/// Runs the spec from every heading in {0, d, ..., 2 pi - d}; d must divide
/// 2 pi to 1e-9. Throws if any run fails.
HeadingSweepResult heading_sweep(const ScenarioSpec& spec, double d_psi0,
                                 double heading_offset = 0.0);

/// (P_ref - P_cand) / P_ref on heading-averaged power.
double benefit(double reference_avg, double candidate_avg);
double benefit(const RunMetrics& reference, const RunMetrics& candidate);

struct FrequencyRow {
    double omega_w = 0.0;  ///< [rad/ft]
    std::optional<double> p_reference;
    std::optional<double> p_adjusted;
    std::optional<double> p_airspeed_only;
    std::optional<double> benefit;
    std::optional<double> benefit_airspeed_only;
    std::string error;  ///< empty when the row is complete
    /// Control-limit bookkeeping over every run in the row (rates, bounds).
    RunMetrics limits;
};

struct FrequencySweepOptions {
    double d_psi0 = 5.0 * kDegToRad;
    bool airspeed_only = true;
};

/// Heading sweeps of the reference and adjusted strategies for each omega_w;
/// rows come back sorted by omega_w. A failing frequency leaves gaps in its
/// row and an error message instead of aborting the table.
std::vector<FrequencyRow> frequency_sweep(const ScenarioSpec& spec, std::vector<double> omegas,
                                          const FrequencySweepOptions& options = {});

/// Worker count used by the sweeps; 0 picks hardware concurrency.
void set_sweep_threads(unsigned count);

}  // namespace windguide
