#pragma once

#include "mbetsim/aircraft.hpp"

namespace mbetsim {

// Leader position relative to the wingman, expressed both as polar
// range/bearing and as separations in the wingman's heading frame.
struct RelativeGeometry {
    double range = 0.0;        // R, m, >= 0
    double bearing = 0.0;      // lambda, rad, atan2(dy, dx); 0 by convention when degenerate
    double lon_sep = 0.0;      // x = R cos(psi_W - lambda), m
    double lat_sep = 0.0;      // y = R sin(psi_W - lambda), m
    double heading_err = 0.0;  // psi_e = psi_L - psi_W, rad
    bool degenerate = false;   // true iff R == 0 (bearing undefined)
};

// Desired formation: separation references and the nominal cruise speed.
struct FormationSpec {
    double lon_ref = 200.0;      // x_r, m
    double lat_ref = -100.0;     // y_r, m
    double nominal_speed = 20.0; // V_n, m/s, > 0
};

struct RelativeRates {
    double range_rate = 0.0;    // Rdot, m/s
    double bearing_rate = 0.0;  // lambdadot, rad/s
    double lon_rate = 0.0;      // xdot, m/s
    double lat_rate = 0.0;      // ydot, m/s
};

RelativeGeometry relative_geometry(const AircraftState& leader, const AircraftState& wingman);

// Analytic rates:
//   Rdot      = V_L cos(psi_L - lambda) - V_W cos(psi_W - lambda)
//   lambdadot = (1/R) [V_L sin(psi_L - lambda) - V_W sin(psi_W - lambda)]
//   xdot      = V_L cos(psi_e) - V_W - y * psidot_W
//   ydot      = x * psidot_W - V_L sin(psi_e)
// Throws DegenerateRangeError when R == 0.
RelativeRates relative_rates(const AircraftState& leader, const AircraftState& wingman,
                             double wingman_heading_rate);

}  // namespace mbetsim
