#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbetsim/aircraft.hpp"
#include "mbetsim/event_comms.hpp"
#include "mbetsim/geometry.hpp"
#include "mbetsim/pi_control.hpp"

namespace mbetsim {

// How the wingman's controller learns the leader state.
enum class CommsMode {
    event_triggered,  // MB-ET: dead-reckoned model, trigger per TriggerConfig
    sigma_zero,       // limit case: transmit whenever the model error is nonzero
    continuous,       // baseline: controller reads the true leader state
};

struct ScheduleEntry {
    double time = 0.0;  // s, entries non-decreasing, first at 0
    CommandPair cmd;
};

struct Scenario {
    double duration = 100.0;  // s, > 0
    double dt = 0.01;         // s, 0 < dt <= duration
    FormationSpec formation;
    AutopilotTimeConstants tc_leader;
    AutopilotTimeConstants tc_wingman;
    XChannelGains x_gains;
    YChannelGains y_gains;
    TriggerConfig trigger;
    CommsMode comms_mode = CommsMode::event_triggered;
    AircraftState leader_init;
    AircraftState wingman_init;
    std::vector<ScheduleEntry> leader_schedule;
};

// One log row per time sample. Row 0 holds the initial conditions with the
// trim command (V_n, 0); row k >= 1 holds the states at t_k, the wingman
// command applied over the step that ended at t_k, and the trigger
// evaluation made during that step. Geometry is computed from true states.
struct TrajectoryRow {
    double t = 0.0;
    AircraftState leader;
    AircraftState wingman;
    RelativeGeometry geom;
    CommandPair wing_cmd;
    double model_error_norm = 0.0;
    double trigger_threshold = 0.0;
    bool event = false;
};

struct TrajectoryLog {
    std::vector<TrajectoryRow> rows;
    FormationSpec formation;
    double dt = 0.0;
    bool stable_gains = true;  // check_stability verdicts at scenario start
};

struct SimulationResult {
    TrajectoryLog log;
    std::vector<EventRecord> events;
};

// Fixed step order: leader command lookup, leader plant step, model
// propagation, trigger check plus reset, controller from the model state,
// wingman plant step. Throws std::invalid_argument on bad scenario values
// and SimulationAbort on non-finite states or coincident aircraft.
SimulationResult run_scenario(const Scenario& s);

struct SummaryReport {
    std::size_t steps = 0;
    double dt = 0.0;
    double settle_band = 0.5;     // m
    double settle_time_lon = 0.0; // last time |x - x_r| exceeds the band, 0 if never
    double settle_time_lat = 0.0;
    double final_lon_err = 0.0;
    double final_lat_err = 0.0;
    std::size_t event_count = 0;
    double mean_interevent = 0.0; // 0 when fewer than two events
    double min_interevent = 0.0;
    double comm_ratio = 0.0;      // events / steps
    bool stable_gains = true;
};

SummaryReport summarize(const TrajectoryLog& log, const std::vector<EventRecord>& events,
                        double settle_band = 0.5);

// CSV and plain-text serialization. Numbers are printed with 9 significant
// digits; output is byte-stable for identical inputs.
void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log);
void write_events_csv(std::ostream& os, const std::vector<EventRecord>& events);
void write_summary(std::ostream& os, const SummaryReport& report);

void write_trajectory_csv_file(const std::string& path, const TrajectoryLog& log);
void write_events_csv_file(const std::string& path, const std::vector<EventRecord>& events);
void write_summary_file(const std::string& path, const SummaryReport& report);

}  // namespace mbetsim
