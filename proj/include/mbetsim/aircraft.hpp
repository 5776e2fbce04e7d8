#pragma once

namespace mbetsim {

// Kinematic state of one aircraft. Heading is kept unwrapped (no modulo 2*pi)
// so the first-order heading lag never sees an artificial jump.
struct AircraftState {
    double pos_x = 0.0;    // m
    double pos_y = 0.0;    // m
    double speed = 0.0;    // m/s
    double heading = 0.0;  // rad, unwrapped
};

struct AircraftStateRate {
    double pos_x = 0.0;    // m/s
    double pos_y = 0.0;    // m/s
    double speed = 0.0;    // m/s^2
    double heading = 0.0;  // rad/s
};

// Closed-loop time constants of the speed and heading autopilot responses.
struct AutopilotTimeConstants {
    double tau_v = 5.0;    // s, > 0
    double tau_psi = 1.5;  // s, > 0
};

// Speed and heading commands, zero-order-held across an integration step.
struct CommandPair {
    double speed_cmd = 0.0;    // m/s
    double heading_cmd = 0.0;  // rad
};

// xdot = V cos(psi), ydot = V sin(psi), Vdot = (Vc - V)/tau_v,
// psidot = (psi_c - psi)/tau_psi.
AircraftStateRate state_derivative(const AircraftState& state, const CommandPair& cmd,
                                   const AutopilotTimeConstants& tc);

// Classical fixed-step RK4 advance with cmd held constant over the step.
// Throws std::invalid_argument for dt <= 0.
AircraftState integrate_step(const AircraftState& state, const CommandPair& cmd,
                             const AutopilotTimeConstants& tc, double dt);

}  // namespace mbetsim
