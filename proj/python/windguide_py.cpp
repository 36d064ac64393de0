#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "windguide/airframe.hpp"
#include "windguide/dynamics.hpp"
#include "windguide/error.hpp"
#include "windguide/guidance.hpp"
#include "windguide/scenario.hpp"
#include "windguide/tracking.hpp"
#include "windguide/windfield.hpp"

namespace py = pybind11;
using namespace windguide;

namespace {

// Plain structs get keyword constructors and a readable repr.
template <typename T>
py::class_<T> record(py::module_& m, const char* name) {
    return py::class_<T>(m, name).def(py::init<>());
}

}  // namespace

PYBIND11_MODULE(_windguide, m) {
    m.doc() = "Wind-energy harvesting guidance: dynamics, wind fields, guidance and scenarios";
    m.attr("__version__") = "0.1.0";

    // Error class name rides along as an attribute so callers can branch on it.
    static py::handle error_type = py::exception<Error>(m, "WindguideError", PyExc_RuntimeError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("error_class") = std::string(to_string(e.error_class()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::enum_<QuantityKind>(m, "QuantityKind")
        .value("speed", QuantityKind::speed)
        .value("time", QuantityKind::time)
        .value("distance", QuantityKind::distance)
        .value("power", QuantityKind::power)
        .value("angle", QuantityKind::angle)
        .value("gradient", QuantityKind::gradient)
        .value("acceleration", QuantityKind::acceleration)
        .value("wavenumber", QuantityKind::wavenumber)
        .value("rate", QuantityKind::rate);

    record<State>(m, "State")
        .def(py::init([](double v_bar, double psi, double gamma, double x_bar, double y_bar,
                         double h_bar) { return State{v_bar, psi, gamma, x_bar, y_bar, h_bar}; }),
             py::kw_only(), py::arg("v_bar") = 0.0, py::arg("psi") = 0.0, py::arg("gamma") = 0.0,
             py::arg("x_bar") = 0.0, py::arg("y_bar") = 0.0, py::arg("h_bar") = 0.0)
        .def_readwrite("v_bar", &State::v_bar)
        .def_readwrite("psi", &State::psi)
        .def_readwrite("gamma", &State::gamma)
        .def_readwrite("x_bar", &State::x_bar)
        .def_readwrite("y_bar", &State::y_bar)
        .def_readwrite("h_bar", &State::h_bar)
        .def(py::self == py::self)
        .def("__repr__", [](const State& s) {
            return py::str("State(v_bar={}, psi={}, gamma={}, x_bar={}, y_bar={}, h_bar={})")
                .format(s.v_bar, s.psi, s.gamma, s.x_bar, s.y_bar, s.h_bar);
        });

    record<NormalizationBasis>(m, "NormalizationBasis")
        .def_readwrite("v_n", &NormalizationBasis::v_n)
        .def_readwrite("mass", &NormalizationBasis::mass)
        .def_readwrite("gravity", &NormalizationBasis::gravity)
        .def_readwrite("wing_area", &NormalizationBasis::wing_area)
        .def("validate", &NormalizationBasis::validate)
        .def("time_unit", &NormalizationBasis::time_unit)
        .def("length_unit", &NormalizationBasis::length_unit)
        .def("scale", &NormalizationBasis::scale)
        .def("normalize", &NormalizationBasis::normalize, py::arg("value"), py::arg("kind"))
        .def("denormalize", &NormalizationBasis::denormalize, py::arg("value"), py::arg("kind"));

    m.def("isa_density", &isa_density, py::arg("altitude_ft"));
    m.def("normalized_density", &normalized_density, py::arg("basis"), py::arg("density"));

    record<AircraftParams>(m, "AircraftParams")
        .def_readwrite("cd0", &AircraftParams::cd0)
        .def_readwrite("k_induced", &AircraftParams::k_induced)
        .def_readwrite("rho_bar", &AircraftParams::rho_bar)
        .def_readwrite("cl_min", &AircraftParams::cl_min)
        .def_readwrite("cl_max", &AircraftParams::cl_max)
        .def_readwrite("cl_cruise", &AircraftParams::cl_cruise)
        .def_readwrite("p_min", &AircraftParams::p_min)
        .def_readwrite("p_max", &AircraftParams::p_max)
        .def_readwrite("mu_max", &AircraftParams::mu_max)
        .def_readwrite("p_rate_max", &AircraftParams::p_rate_max)
        .def_readwrite("cl_rate_max", &AircraftParams::cl_rate_max)
        .def_readwrite("mu_rate_max", &AircraftParams::mu_rate_max)
        .def_readwrite("v_bar_min", &AircraftParams::v_bar_min)
        .def_readwrite("v_bar_max", &AircraftParams::v_bar_max)
        .def("apply_speed_rule", &AircraftParams::apply_speed_rule)
        .def("validate", &AircraftParams::validate)
        .def("endurance_speed", &AircraftParams::endurance_speed)
        .def("level_lift", &AircraftParams::level_lift, py::arg("v_bar"));

    m.def("default_aircraft", &default_aircraft, py::arg("basis") = NormalizationBasis{},
          py::arg("altitude_ft") = 15000.0);

    record<GuidanceConfig>(m, "GuidanceConfig")
        .def_readwrite("dt_update", &GuidanceConfig::dt_update)
        .def_readwrite("dv_max", &GuidanceConfig::dv_max)
        .def_readwrite("dpsi_max", &GuidanceConfig::dpsi_max)
        .def_readwrite("fd_step_v", &GuidanceConfig::fd_step_v)
        .def_readwrite("fd_step_psi", &GuidanceConfig::fd_step_psi)
        .def_readwrite("levenberg_lambda0", &GuidanceConfig::levenberg_lambda0);

    py::class_<GuidanceBounds>(m, "GuidanceBounds")
        .def_readwrite("dt_bar", &GuidanceBounds::dt_bar)
        .def_readwrite("dv_bar_max", &GuidanceBounds::dv_bar_max)
        .def_readwrite("dpsi_max", &GuidanceBounds::dpsi_max)
        .def_readwrite("fd_step_v", &GuidanceBounds::fd_step_v)
        .def_readwrite("fd_step_psi", &GuidanceBounds::fd_step_psi)
        .def_readwrite("lambda0", &GuidanceBounds::lambda0);
    m.def("normalize_guidance", &normalize, py::arg("config"), py::arg("basis"));

    // Wind
    py::enum_<WindKind>(m, "WindKind")
        .value("constant", WindKind::constant)
        .value("sinusoidal", WindKind::sinusoidal)
        .value("sinusoidal_stochastic", WindKind::sinusoidal_stochastic);

    record<WindSample>(m, "WindSample")
        .def_readwrite("components", &WindSample::components)
        .def_readwrite("gradient", &WindSample::gradient)
        .def_readwrite("time_partial", &WindSample::time_partial)
        .def_readwrite("rate", &WindSample::rate);

    record<WindFieldParams>(m, "WindFieldParams")
        .def_readwrite("kind", &WindFieldParams::kind)
        .def_readwrite("w_m", &WindFieldParams::w_m)
        .def_readwrite("psi_w", &WindFieldParams::psi_w)
        .def_readwrite("omega_w", &WindFieldParams::omega_w)
        .def_readwrite("phase", &WindFieldParams::phase)
        .def_readwrite("ou_sigma", &WindFieldParams::ou_sigma)
        .def_readwrite("ou_tau", &WindFieldParams::ou_tau)
        .def_readwrite("ou_clock_hz", &WindFieldParams::ou_clock_hz)
        .def_readwrite("seed", &WindFieldParams::seed);

    py::class_<WindField>(m, "WindField")
        .def(py::init<>())
        .def_static("uniform", &WindField::uniform, py::arg("w_x_bar"), py::arg("w_y_bar"))
        .def("sample", &WindField::sample, py::arg("x_bar"), py::arg("y_bar"),
             py::arg("h_bar") = 0.0, py::arg("t_bar") = 0.0)
        .def("advect", &WindField::advect, py::arg("state"), py::arg("t_bar") = 0.0)
        .def_property_readonly("stochastic", &WindField::stochastic)
        .def_property_readonly("amplitude", &WindField::amplitude)
        .def_property_readonly("wavenumber", &WindField::wavenumber);
    m.def("make_wind_field", &make_wind_field, py::arg("params"),
          py::arg("basis") = NormalizationBasis{});

    // Dynamics
    record<Controls>(m, "Controls")
        .def(py::init([](double p_bar, double cl, double mu) { return Controls{p_bar, cl, mu}; }),
             py::arg("p_bar"), py::arg("cl"), py::arg("mu"))
        .def_readwrite("p_bar", &Controls::p_bar)
        .def_readwrite("cl", &Controls::cl)
        .def_readwrite("mu", &Controls::mu)
        .def("__repr__", [](const Controls& c) {
            return py::str("Controls(p_bar={}, cl={}, mu={})").format(c.p_bar, c.cl, c.mu);
        });

    record<WindRates>(m, "WindRates")
        .def_readwrite("w_v_rate", &WindRates::w_v_rate)
        .def_readwrite("w_psi_rate", &WindRates::w_psi_rate)
        .def_readwrite("w_gamma_rate", &WindRates::w_gamma_rate);

    m.def("wind_rates", &wind_rates, py::arg("state"), py::arg("wind"));
    m.def("trim_controls", &trim_controls, py::arg("v_bar"), py::arg("params"));
    m.def("step", &step, py::arg("state"), py::arg("controls"), py::arg("wind"), py::arg("t_bar"),
          py::arg("dt_bar"), py::arg("params"));

    // Guidance
    py::class_<ProjectedPowerInputs>(m, "ProjectedPowerInputs")
        .def(py::init([](const State& s, const WindSample& w, double dt_bar) {
                 return ProjectedPowerInputs{s, w, dt_bar};
             }),
             py::arg("state"), py::arg("wind"), py::arg("dt_bar"))
        .def_readwrite("state", &ProjectedPowerInputs::state)
        .def_readwrite("wind", &ProjectedPowerInputs::wind)
        .def_readwrite("dt_bar", &ProjectedPowerInputs::dt_bar);

    py::class_<ProjectedPower>(m, "ProjectedPower")
        .def_readonly("value", &ProjectedPower::value)
        .def_readonly("feasible", &ProjectedPower::feasible)
        .def("effective", &ProjectedPower::effective);

    py::enum_<AdjustmentMode>(m, "AdjustmentMode")
        .value("airspeed_and_heading", AdjustmentMode::airspeed_and_heading)
        .value("airspeed_only", AdjustmentMode::airspeed_only);

    py::class_<Adjustment>(m, "Adjustment")
        .def_readonly("d_v_bar", &Adjustment::d_v_bar)
        .def_readonly("d_psi", &Adjustment::d_psi)
        .def_readonly("gradient", &Adjustment::gradient)
        .def_readonly("hessian", &Adjustment::hessian)
        .def_readonly("lambda_used", &Adjustment::lambda_used)
        .def_readonly("clamped", &Adjustment::clamped)
        .def_property_readonly("status",
                               [](const Adjustment& a) { return std::string(to_string(a.status)); })
        .def_readonly("predicted_power", &Adjustment::predicted_power)
        .def_readonly("baseline_power", &Adjustment::baseline_power);

    m.def("steady_level_power", &steady_level_power, py::arg("v_bar"), py::arg("w_v_rate"),
          py::arg("params"));
    m.def("position_increment",
          [](const ProjectedPowerInputs& in, double d_v, double d_psi) {
              const PositionIncrement d = position_increment(in, d_v, d_psi);
              return py::make_tuple(d.dx_bar, d.dy_bar);
          },
          py::arg("inputs"), py::arg("d_v"), py::arg("d_psi"));
    m.def("projected_wind_rate", &projected_wind_rate, py::arg("inputs"), py::arg("d_v"),
          py::arg("d_psi"));
    m.def("projected_power", &projected_power, py::arg("inputs"), py::arg("d_v"), py::arg("d_psi"),
          py::arg("params"));
    m.def("optimal_adjustment", &optimal_adjustment, py::arg("inputs"), py::arg("bounds"),
          py::arg("params"), py::arg("mode") = AdjustmentMode::airspeed_and_heading);

    // Tracking
    record<VelocityCommand>(m, "VelocityCommand")
        .def(py::init([](double v, double psi, double gamma) {
                 return VelocityCommand{v, psi, gamma};
             }),
             py::arg("v_bar_c"), py::arg("psi_c"), py::arg("gamma_c") = 0.0)
        .def_readwrite("v_bar_c", &VelocityCommand::v_bar_c)
        .def_readwrite("psi_c", &VelocityCommand::psi_c)
        .def_readwrite("gamma_c", &VelocityCommand::gamma_c);

    record<TrackingGains>(m, "TrackingGains")
        .def_readwrite("k_v", &TrackingGains::k_v)
        .def_readwrite("k_psi", &TrackingGains::k_psi)
        .def_readwrite("k_gamma", &TrackingGains::k_gamma);

    m.def("control_commands", &control_commands, py::arg("state"), py::arg("cmd"),
          py::arg("wind_rates"), py::arg("gains"), py::arg("params"));
    m.def("saturate", &saturate, py::arg("controls"), py::arg("previous"), py::arg("params"),
          py::arg("dt_bar"));
    m.def("track", &track, py::arg("state"), py::arg("cmd"), py::arg("wind_rates"),
          py::arg("gains"), py::arg("params"), py::arg("previous"), py::arg("dt_bar"));

    // Scenarios
    py::enum_<ScenarioKind>(m, "ScenarioKind")
        .value("reference", ScenarioKind::reference)
        .value("adjusted", ScenarioKind::adjusted)
        .value("adjusted_airspeed_only", ScenarioKind::adjusted_airspeed_only);

    record<ScenarioSpec>(m, "ScenarioSpec")
        .def_readwrite("kind", &ScenarioSpec::kind)
        .def_readwrite("basis", &ScenarioSpec::basis)
        .def_readwrite("aircraft", &ScenarioSpec::aircraft)
        .def_readwrite("initial_state", &ScenarioSpec::initial_state)
        .def_readwrite("altitude_ft", &ScenarioSpec::altitude_ft)
        .def_readwrite("flight_time", &ScenarioSpec::flight_time)
        .def_readwrite("sim_rate", &ScenarioSpec::sim_rate)
        .def_readwrite("output_rate", &ScenarioSpec::output_rate)
        .def_readwrite("guidance", &ScenarioSpec::guidance)
        .def_readwrite("wind", &ScenarioSpec::wind)
        .def_readwrite("gains", &ScenarioSpec::gains)
        .def("validate", &ScenarioSpec::validate);
    m.def("default_scenario", &default_scenario);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("t", &TrajectorySample::t)
        .def_readonly("state", &TrajectorySample::state)
        .def_readonly("controls", &TrajectorySample::controls)
        .def_readonly("command", &TrajectorySample::command)
        .def_readonly("wind", &TrajectorySample::wind)
        .def_readonly("wind_rates", &TrajectorySample::wind_rates);

    py::class_<RunMetrics>(m, "RunMetrics")
        .def_readonly("p_bar_avg", &RunMetrics::p_bar_avg)
        .def_readonly("p_bar_heading_avg", &RunMetrics::p_bar_heading_avg)
        .def_readonly("benefit", &RunMetrics::benefit)
        .def_readonly("max_p_rate", &RunMetrics::max_p_rate)
        .def_readonly("max_cl_rate", &RunMetrics::max_cl_rate)
        .def_readonly("max_mu_rate", &RunMetrics::max_mu_rate)
        .def_readonly("bounds_respected", &RunMetrics::bounds_respected)
        .def_readonly("steps", &RunMetrics::steps)
        .def_readonly("adjustments", &RunMetrics::adjustments)
        .def_readonly("adjustments_accepted", &RunMetrics::adjustments_accepted)
        .def_readonly("singular_tracking_holds", &RunMetrics::singular_tracking_holds)
        .def_readonly("horizon_halvings", &RunMetrics::horizon_halvings);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("metrics", &RunResult::metrics)
        .def_readonly("trajectory", &RunResult::trajectory);

    py::class_<HeadingSweepResult>(m, "HeadingSweepResult")
        .def_readonly("headings", &HeadingSweepResult::headings)
        .def_readonly("p_bar_avg", &HeadingSweepResult::p_bar_avg)
        .def_readonly("metrics", &HeadingSweepResult::metrics);

    py::class_<FrequencyRow>(m, "FrequencyRow")
        .def_readonly("omega_w", &FrequencyRow::omega_w)
        .def_readonly("p_reference", &FrequencyRow::p_reference)
        .def_readonly("p_adjusted", &FrequencyRow::p_adjusted)
        .def_readonly("p_airspeed_only", &FrequencyRow::p_airspeed_only)
        .def_readonly("benefit", &FrequencyRow::benefit)
        .def_readonly("benefit_airspeed_only", &FrequencyRow::benefit_airspeed_only)
        .def_readonly("error", &FrequencyRow::error)
        .def_readonly("limits", &FrequencyRow::limits);

    // Long runs release the GIL; sweeps use their own thread pool.
    m.def("run", &run, py::arg("spec"), py::arg("keep_trajectory") = true,
          py::call_guard<py::gil_scoped_release>());
    m.def("heading_sweep", &heading_sweep, py::arg("spec"), py::arg("d_psi0"),
          py::arg("heading_offset") = 0.0, py::call_guard<py::gil_scoped_release>());
    m.def("frequency_sweep",
          [](const ScenarioSpec& spec, std::vector<double> omegas, double d_psi0,
             bool airspeed_only) {
              return frequency_sweep(spec, std::move(omegas),
                                     FrequencySweepOptions{d_psi0, airspeed_only});
          },
          py::arg("spec"), py::arg("omegas"), py::arg("d_psi0") = 5.0 * kDegToRad,
          py::arg("airspeed_only") = true, py::call_guard<py::gil_scoped_release>());
    m.def("benefit", py::overload_cast<double, double>(&benefit), py::arg("reference_avg"),
          py::arg("candidate_avg"));
    m.def("set_sweep_threads", &set_sweep_threads, py::arg("count"));
}
