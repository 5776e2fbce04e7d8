#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbetsim/config.hpp"
#include "mbetsim/errors.hpp"
#include "mbetsim/geometry.hpp"
#include "mbetsim/linear_model.hpp"
#include "mbetsim/pi_control.hpp"
#include "mbetsim/sim_engine.hpp"

namespace py = pybind11;
using namespace mbetsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Leader-wingman formation simulation with event-triggered model updates";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DegenerateRangeError>(m, "DegenerateRangeError", PyExc_ValueError);
    py::register_exception<SimulationAbort>(m, "SimulationAbort", PyExc_RuntimeError);

    py::class_<AircraftState>(m, "AircraftState")
        .def(py::init<>())
        .def(py::init([](double x, double y, double v, double psi) {
                 return AircraftState{x, y, v, psi};
             }),
             py::arg("pos_x"), py::arg("pos_y"), py::arg("speed"), py::arg("heading"))
        .def_readwrite("pos_x", &AircraftState::pos_x)
        .def_readwrite("pos_y", &AircraftState::pos_y)
        .def_readwrite("speed", &AircraftState::speed)
        .def_readwrite("heading", &AircraftState::heading)
        .def("__repr__", [](const AircraftState& s) {
            return "AircraftState(pos_x=" + std::to_string(s.pos_x) +
                   ", pos_y=" + std::to_string(s.pos_y) + ", speed=" + std::to_string(s.speed) +
                   ", heading=" + std::to_string(s.heading) + ")";
        });

    py::class_<CommandPair>(m, "CommandPair")
        .def(py::init<>())
        .def(py::init([](double v, double psi) {
                 return CommandPair{v, psi};
             }),
             py::arg("speed_cmd"), py::arg("heading_cmd"))
        .def_readwrite("speed_cmd", &CommandPair::speed_cmd)
        .def_readwrite("heading_cmd", &CommandPair::heading_cmd);

    py::class_<AutopilotTimeConstants>(m, "AutopilotTimeConstants")
        .def(py::init<>())
        .def(py::init([](double tv, double tp) {
                 return AutopilotTimeConstants{tv, tp};
             }),
             py::arg("tau_v"), py::arg("tau_psi"))
        .def_readwrite("tau_v", &AutopilotTimeConstants::tau_v)
        .def_readwrite("tau_psi", &AutopilotTimeConstants::tau_psi);

    py::class_<FormationSpec>(m, "FormationSpec")
        .def(py::init<>())
        .def(py::init([](double xr, double yr, double vn) {
                 return FormationSpec{xr, yr, vn};
             }),
             py::arg("lon_ref"), py::arg("lat_ref"), py::arg("nominal_speed"))
        .def_readwrite("lon_ref", &FormationSpec::lon_ref)
        .def_readwrite("lat_ref", &FormationSpec::lat_ref)
        .def_readwrite("nominal_speed", &FormationSpec::nominal_speed);

    py::class_<XChannelGains>(m, "XChannelGains")
        .def(py::init<>())
        .def(py::init([](double kxp, double kxi, double kx, double kv) {
                 return XChannelGains{kxp, kxi, kx, kv};
             }),
             py::arg("kxp"), py::arg("kxi"), py::arg("kx"), py::arg("kv"))
        .def_readwrite("kxp", &XChannelGains::kxp)
        .def_readwrite("kxi", &XChannelGains::kxi)
        .def_readwrite("kx", &XChannelGains::kx)
        .def_readwrite("kv", &XChannelGains::kv);

    py::class_<YChannelGains>(m, "YChannelGains")
        .def(py::init<>())
        .def(py::init([](double kyp, double kyi, double ky, double kpsi) {
                 return YChannelGains{kyp, kyi, ky, kpsi};
             }),
             py::arg("kyp"), py::arg("kyi"), py::arg("ky"), py::arg("kpsi"))
        .def_readwrite("kyp", &YChannelGains::kyp)
        .def_readwrite("kyi", &YChannelGains::kyi)
        .def_readwrite("ky", &YChannelGains::ky)
        .def_readwrite("kpsi", &YChannelGains::kpsi);

    py::enum_<NormScope>(m, "NormScope")
        .value("full_state", NormScope::full_state)
        .value("velocity_heading", NormScope::velocity_heading);

    py::enum_<CommsMode>(m, "CommsMode")
        .value("event_triggered", CommsMode::event_triggered)
        .value("sigma_zero", CommsMode::sigma_zero)
        .value("continuous", CommsMode::continuous);

    py::class_<TriggerConfig>(m, "TriggerConfig")
        .def(py::init<>())
        .def(py::init([](double sigma, NormScope scope) {
                 return TriggerConfig{sigma, scope};
             }),
             py::arg("sigma"), py::arg("scope") = NormScope::full_state)
        .def_readwrite("sigma", &TriggerConfig::sigma)
        .def_readwrite("scope", &TriggerConfig::scope);

    py::class_<ScheduleEntry>(m, "ScheduleEntry")
        .def(py::init<>())
        .def(py::init([](double t, const CommandPair& cmd) {
                 return ScheduleEntry{t, cmd};
             }),
             py::arg("time"), py::arg("cmd"))
        .def_readwrite("time", &ScheduleEntry::time)
        .def_readwrite("cmd", &ScheduleEntry::cmd);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("duration", &Scenario::duration)
        .def_readwrite("dt", &Scenario::dt)
        .def_readwrite("formation", &Scenario::formation)
        .def_readwrite("tc_leader", &Scenario::tc_leader)
        .def_readwrite("tc_wingman", &Scenario::tc_wingman)
        .def_readwrite("x_gains", &Scenario::x_gains)
        .def_readwrite("y_gains", &Scenario::y_gains)
        .def_readwrite("trigger", &Scenario::trigger)
        .def_readwrite("comms_mode", &Scenario::comms_mode)
        .def_readwrite("leader_init", &Scenario::leader_init)
        .def_readwrite("wingman_init", &Scenario::wingman_init)
        .def_readwrite("leader_schedule", &Scenario::leader_schedule);

    py::class_<RelativeGeometry>(m, "RelativeGeometry")
        .def_readonly("range", &RelativeGeometry::range)
        .def_readonly("bearing", &RelativeGeometry::bearing)
        .def_readonly("lon_sep", &RelativeGeometry::lon_sep)
        .def_readonly("lat_sep", &RelativeGeometry::lat_sep)
        .def_readonly("heading_err", &RelativeGeometry::heading_err)
        .def_readonly("degenerate", &RelativeGeometry::degenerate);

    py::class_<RelativeRates>(m, "RelativeRates")
        .def_readonly("range_rate", &RelativeRates::range_rate)
        .def_readonly("bearing_rate", &RelativeRates::bearing_rate)
        .def_readonly("lon_rate", &RelativeRates::lon_rate)
        .def_readonly("lat_rate", &RelativeRates::lat_rate);

    py::class_<ErrorState>(m, "ErrorState")
        .def(py::init<>())
        .def_readwrite("x_err", &ErrorState::x_err)
        .def_readwrite("vw_err", &ErrorState::vw_err)
        .def_readwrite("vl_err", &ErrorState::vl_err)
        .def_readwrite("y_err", &ErrorState::y_err)
        .def_readwrite("psi_w", &ErrorState::psi_w)
        .def_readwrite("psi_l", &ErrorState::psi_l)
        .def("to_array", &ErrorState::to_array);

    py::class_<LinearizedSystem>(m, "LinearizedSystem")
        .def_readonly("A", &LinearizedSystem::A)
        .def_readonly("B", &LinearizedSystem::B)
        .def_readonly("E", &LinearizedSystem::E);

    py::class_<StabilityCondition>(m, "StabilityCondition")
        .def_readonly("label", &StabilityCondition::label)
        .def_readonly("lhs", &StabilityCondition::lhs)
        .def_readonly("rhs", &StabilityCondition::rhs)
        .def_readonly("satisfied", &StabilityCondition::satisfied);

    py::class_<StabilityVerdict>(m, "StabilityVerdict")
        .def_readonly("stable", &StabilityVerdict::stable)
        .def_readonly("conditions", &StabilityVerdict::conditions);

    py::class_<EventRecord>(m, "EventRecord")
        .def_readonly("time", &EventRecord::time)
        .def_readonly("error_norm", &EventRecord::error_norm)
        .def_readonly("threshold", &EventRecord::threshold)
        .def_readonly("transmitted_state", &EventRecord::transmitted_state);

    py::class_<TrajectoryRow>(m, "TrajectoryRow")
        .def_readonly("t", &TrajectoryRow::t)
        .def_readonly("leader", &TrajectoryRow::leader)
        .def_readonly("wingman", &TrajectoryRow::wingman)
        .def_readonly("geom", &TrajectoryRow::geom)
        .def_readonly("wing_cmd", &TrajectoryRow::wing_cmd)
        .def_readonly("model_error_norm", &TrajectoryRow::model_error_norm)
        .def_readonly("trigger_threshold", &TrajectoryRow::trigger_threshold)
        .def_readonly("event", &TrajectoryRow::event);

    py::class_<TrajectoryLog>(m, "TrajectoryLog")
        .def_readonly("rows", &TrajectoryLog::rows)
        .def_readonly("formation", &TrajectoryLog::formation)
        .def_readonly("dt", &TrajectoryLog::dt)
        .def_readonly("stable_gains", &TrajectoryLog::stable_gains);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("log", &SimulationResult::log)
        .def_readonly("events", &SimulationResult::events);

    py::class_<SummaryReport>(m, "SummaryReport")
        .def_readonly("steps", &SummaryReport::steps)
        .def_readonly("dt", &SummaryReport::dt)
        .def_readonly("settle_band", &SummaryReport::settle_band)
        .def_readonly("settle_time_lon", &SummaryReport::settle_time_lon)
        .def_readonly("settle_time_lat", &SummaryReport::settle_time_lat)
        .def_readonly("final_lon_err", &SummaryReport::final_lon_err)
        .def_readonly("final_lat_err", &SummaryReport::final_lat_err)
        .def_readonly("event_count", &SummaryReport::event_count)
        .def_readonly("mean_interevent", &SummaryReport::mean_interevent)
        .def_readonly("min_interevent", &SummaryReport::min_interevent)
        .def_readonly("comm_ratio", &SummaryReport::comm_ratio)
        .def_readonly("stable_gains", &SummaryReport::stable_gains);

    m.def("load_scenario", &load_scenario, py::arg("path"),
          "Load and validate a scenario JSON file");
    m.def("parse_scenario", &parse_scenario, py::arg("json_text"),
          "Validate a scenario from a JSON string");
    m.def("run_scenario", &run_scenario, py::arg("scenario"),
          "Run the closed-loop simulation and return the log and events");
    m.def("summarize", &summarize, py::arg("log"), py::arg("events"),
          py::arg("settle_band") = 0.5);
    m.def("relative_geometry", &relative_geometry, py::arg("leader"), py::arg("wingman"));
    m.def("relative_rates", &relative_rates, py::arg("leader"), py::arg("wingman"),
          py::arg("wingman_heading_rate"));
    m.def("integrate_step", &integrate_step, py::arg("state"), py::arg("cmd"), py::arg("tc"),
          py::arg("dt"));
    m.def("error_state", &error_state, py::arg("leader"), py::arg("wingman"), py::arg("spec"));
    m.def("build_linear_system", &build_linear_system, py::arg("spec"), py::arg("tc_leader"),
          py::arg("tc_wingman"));
    m.def("finite_difference_system", &finite_difference_system, py::arg("spec"),
          py::arg("tc_leader"), py::arg("tc_wingman"), py::arg("step") = 1e-5);
    m.def("check_stability_x", &check_stability_x, py::arg("gains"), py::arg("tau_vw"));
    m.def("check_stability_y", &check_stability_y, py::arg("gains"), py::arg("tau_psiw"),
          py::arg("spec"));
}
