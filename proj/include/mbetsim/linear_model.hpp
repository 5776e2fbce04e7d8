#pragma once

#include <array>
#include <cstddef>

#include "mbetsim/aircraft.hpp"
#include "mbetsim/geometry.hpp"

namespace mbetsim {

template <std::size_t Rows, std::size_t Cols>
using Matrix = std::array<std::array<double, Cols>, Rows>;

using Mat3 = Matrix<3, 3>;
using Mat6 = Matrix<6, 6>;
using Mat6x2 = Matrix<6, 2>;

// Deviation state about the trim point (separations at reference, both
// speeds at nominal, both headings zero). Order matches the compact model:
// [x_err, vw_err, vl_err, y_err, psi_w, psi_l].
struct ErrorState {
    double x_err = 0.0;   // lon_sep - lon_ref, m
    double vw_err = 0.0;  // V_W - V_n, m/s
    double vl_err = 0.0;  // V_L - V_n, m/s
    double y_err = 0.0;   // lat_sep - lat_ref, m
    double psi_w = 0.0;   // rad
    double psi_l = 0.0;   // rad

    std::array<double, 6> to_array() const { return {x_err, vw_err, vl_err, y_err, psi_w, psi_l}; }
    static ErrorState from_array(const std::array<double, 6>& v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
};

// xdot = A x + B u + E d with u = [V_Wc, psi_Wc] (wingman command deviations)
// and d = [V_Lc, psi_Lc] (leader command deviations).
// Structure: the 3x3 lower-left block of A is zero; B rows 2 and 5 are zero;
// E rows 0, 1, 3, 4 are zero.
struct LinearizedSystem {
    Mat6 A{};
    Mat6x2 B{};
    Mat6x2 E{};
};

// Hand-coded model matrices of the linearized formation error dynamics.
LinearizedSystem build_linear_system(const FormationSpec& spec,
                                     const AutopilotTimeConstants& tc_leader,
                                     const AutopilotTimeConstants& tc_wingman);

// Maps absolute states to the deviation vector. Throws DegenerateRangeError
// when the aircraft coincide.
ErrorState error_state(const AircraftState& leader, const AircraftState& wingman,
                       const FormationSpec& spec);

// Nonlinear error dynamics: separation rates with x = x_err + lon_ref,
// y = y_err + lat_ref, plus the four first-order lag equations. This is the
// vector field whose linearization at the origin the hand-coded matrices
// claim to be; it is assembled from the geometry equations and never reads
// build_linear_system.
std::array<double, 6> error_dynamics(const ErrorState& err, const CommandPair& wing_cmd_dev,
                                     const CommandPair& lead_cmd_dev, const FormationSpec& spec,
                                     const AutopilotTimeConstants& tc_leader,
                                     const AutopilotTimeConstants& tc_wingman);

// Central finite differences of error_dynamics at the trim point.
// Independent check route for build_linear_system.
LinearizedSystem finite_difference_system(const FormationSpec& spec,
                                          const AutopilotTimeConstants& tc_leader,
                                          const AutopilotTimeConstants& tc_wingman,
                                          double step = 1e-5);

}  // namespace mbetsim
