#include "mbetsim/event_comms.hpp"

#include <cmath>

namespace mbetsim {

LeaderModel propagate_model(const LeaderModel& model, const AutopilotTimeConstants& tc_leader,
                            double dt) {
    // Commands pinned to the current estimate keep speed and heading exactly
    // constant, so this is straight-line dead reckoning through the same
    // integrator the plant uses.
    const CommandPair frozen{model.est.speed, model.est.heading};
    LeaderModel out = model;
    out.est = integrate_step(model.est, frozen, tc_leader, dt);
    return out;
}

namespace {

double scoped_norm(const AircraftState& s, NormScope scope) {
    if (scope == NormScope::velocity_heading) {
        return std::hypot(s.speed, s.heading);
    }
    return std::sqrt(s.pos_x * s.pos_x + s.pos_y * s.pos_y + s.speed * s.speed +
                     s.heading * s.heading);
}

}  // namespace

TriggerDecision check_trigger(const LeaderModel& model, const AircraftState& truth,
                              const TriggerConfig& cfg) {
    const AircraftState e{model.est.pos_x - truth.pos_x, model.est.pos_y - truth.pos_y,
                          model.est.speed - truth.speed, model.est.heading - truth.heading};
    TriggerDecision d;
    d.error_norm = scoped_norm(e, cfg.scope);
    d.threshold = cfg.sigma * scoped_norm(truth, cfg.scope);
    d.fire = d.error_norm >= d.threshold && d.error_norm > 0.0;
    return d;
}

UpdateResult apply_update(const LeaderModel& /*model*/, const AircraftState& truth, double t,
                          const TriggerDecision& decision) {
    UpdateResult out;
    out.model.est = truth;
    out.model.last_update_time = t;
    out.record.time = t;
    out.record.error_norm = decision.error_norm;
    out.record.threshold = decision.threshold;
    out.record.transmitted_state = truth;
    return out;
}

}  // namespace mbetsim
