// CSV and SVG artifact writers. Numbers are written with 9 significant
// digits and a '.' decimal point independent of the process locale.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "windguide/airframe.hpp"
#include "windguide/scenario.hpp"

namespace windguide {

std::string format_number(double value);

inline constexpr const char* kTrajectoryHeader =
    "t_s,v_bar,psi,gamma,x_bar,y_bar,h_bar,p_bar,cl,mu,v_bar_c,psi_c,"
    "w_x,w_y,w_h,w_x_rate,w_y_rate,w_h_rate,w_v_rate,w_psi_rate,w_gamma_rate";

inline constexpr const char* kMetricsHeader =
    "label,kind,p_bar_avg,p_bar_heading_avg,benefit,max_p_rate,max_cl_rate,max_mu_rate,"
    "bounds_respected,adjustments,adjustments_accepted";

inline constexpr const char* kHeadingSweepHeader = "heading_deg,p_bar_reference,p_bar_candidate";

inline constexpr const char* kFrequencySweepHeader =
    "omega_w,p_bar_reference,p_bar_adjusted,p_bar_airspeed_only,benefit,benefit_airspeed_only,error";

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& trajectory);

struct MetricsRow {
    std::string label;
    ScenarioKind kind;
    RunMetrics metrics;
};

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows);

void write_heading_sweep_csv(std::ostream& out, const HeadingSweepResult& reference,
                             const HeadingSweepResult& candidate);

void write_frequency_sweep_csv(std::ostream& out, const std::vector<FrequencyRow>& rows);

/// Line plot of relative benefit [%] against omega_w as a standalone SVG.
void write_benefit_plot_svg(std::ostream& out, const std::vector<FrequencyRow>& rows);

}  // namespace windguide
