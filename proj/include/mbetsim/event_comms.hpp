#pragma once

#include "mbetsim/aircraft.hpp"

namespace mbetsim {

// Which leader-state components enter both sides of the trigger norm.
enum class NormScope {
    full_state,        // [pos_x, pos_y, speed, heading]
    velocity_heading,  // [speed, heading] only
};

struct TriggerConfig {
    double sigma = 0.05;  // relative threshold, 0 < sigma < 1
    NormScope scope = NormScope::full_state;
};

// Shared dead-reckoning model of the leader. Both ends of the (ideal)
// channel hold identical copies, so one object represents both.
struct LeaderModel {
    AircraftState est;             // xhat
    double last_update_time = 0.0; // s
};

struct TriggerDecision {
    bool fire = false;
    double error_norm = 0.0;  // ||xhat - x|| over the configured scope
    double threshold = 0.0;   // sigma * ||x|| over the same scope
};

struct EventRecord {
    double time = 0.0;
    double error_norm = 0.0;
    double threshold = 0.0;
    AircraftState transmitted_state;
};

struct UpdateResult {
    LeaderModel model;
    EventRecord record;
};

// One RK4 step with commands frozen at the last-received state values, i.e.
// constant speed and heading between events. Throws for dt <= 0.
LeaderModel propagate_model(const LeaderModel& model, const AutopilotTimeConstants& tc_leader,
                            double dt);

// Fires iff ||e|| >= sigma * ||x_truth|| and ||e|| > 0 (no vacuous events
// when both norms are zero). Norms are Euclidean over the scope components,
// mixed units taken as-is.
TriggerDecision check_trigger(const LeaderModel& model, const AircraftState& truth,
                              const TriggerConfig& cfg);

// Reset xhat to truth and log the transmission.
UpdateResult apply_update(const LeaderModel& model, const AircraftState& truth, double t,
                          const TriggerDecision& decision);

}  // namespace mbetsim
