#include "mbetsim/aircraft.hpp"

#include <cmath>
#include <stdexcept>

namespace mbetsim {

AircraftStateRate state_derivative(const AircraftState& state, const CommandPair& cmd,
                                   const AutopilotTimeConstants& tc) {
    AircraftStateRate rate;
    rate.pos_x = state.speed * std::cos(state.heading);
    rate.pos_y = state.speed * std::sin(state.heading);
    rate.speed = (cmd.speed_cmd - state.speed) / tc.tau_v;
    rate.heading = (cmd.heading_cmd - state.heading) / tc.tau_psi;
    return rate;
}

namespace {

AircraftState advance(const AircraftState& s, const AircraftStateRate& r, double h) {
    return {s.pos_x + h * r.pos_x, s.pos_y + h * r.pos_y, s.speed + h * r.speed,
            s.heading + h * r.heading};
}

}  // namespace

AircraftState integrate_step(const AircraftState& state, const CommandPair& cmd,
                             const AutopilotTimeConstants& tc, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("integrate_step: dt must be positive");
    }
    const AircraftStateRate k1 = state_derivative(state, cmd, tc);
    const AircraftStateRate k2 = state_derivative(advance(state, k1, 0.5 * dt), cmd, tc);
    const AircraftStateRate k3 = state_derivative(advance(state, k2, 0.5 * dt), cmd, tc);
    const AircraftStateRate k4 = state_derivative(advance(state, k3, dt), cmd, tc);
    AircraftState out;
    out.pos_x = state.pos_x + dt / 6.0 * (k1.pos_x + 2.0 * k2.pos_x + 2.0 * k3.pos_x + k4.pos_x);
    out.pos_y = state.pos_y + dt / 6.0 * (k1.pos_y + 2.0 * k2.pos_y + 2.0 * k3.pos_y + k4.pos_y);
    out.speed = state.speed + dt / 6.0 * (k1.speed + 2.0 * k2.speed + 2.0 * k3.speed + k4.speed);
    out.heading =
        state.heading + dt / 6.0 * (k1.heading + 2.0 * k2.heading + 2.0 * k3.heading + k4.heading);
    return out;
}

}  // namespace mbetsim
