#pragma once

#include <array>
#include <string>

#include "mbetsim/linear_model.hpp"

namespace mbetsim {

// Longitudinal channel: e_x = kx * x_err + kv * (V_L - V_W),
// speed command deviation = kxp * e_x + kxi * int(e_x).
struct XChannelGains {
    double kxp = 0.0;  // proportional, dimensionless
    double kxi = 0.0;  // integral, 1/s
    double kx = 0.0;   // separation-error weight
    double kv = 0.0;   // speed-difference weight
};

// Lateral channel: e_y = ky * y_err + kpsi * (psi_L - psi_W),
// heading command = kyp * e_y + kyi * int(e_y).
struct YChannelGains {
    double kyp = 0.0;
    double kyi = 0.0;
    double ky = 0.0;
    double kpsi = 0.0;
};

// Trapezoidal integrator memory. prev_* hold the previous error samples;
// seed them with the t=0 errors so the accumulated sum is the trapezoid
// rule over all samples including the initial one.
struct PIControllerState {
    double int_ex = 0.0;
    double int_ey = 0.0;
    double prev_ex = 0.0;
    double prev_ey = 0.0;
};

struct ChannelErrors {
    double ex = 0.0;
    double ey = 0.0;
};

struct PiStepResult {
    CommandPair cmd;  // absolute commands: speed_cmd = V_n + dV, heading_cmd = dpsi
    PIControllerState state;
};

// One Theorem-style gain inequality with its evaluated sides.
// satisfied reflects the comparison named in label (strict).
struct StabilityCondition {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
};

struct StabilityVerdict {
    bool stable = false;
    std::array<StabilityCondition, 3> conditions{};
};

ChannelErrors channel_errors(const ErrorState& err, const XChannelGains& gx,
                             const YChannelGains& gy);

// Advances both integrals one trapezoidal step and forms the commands from
// the freshly advanced integrals. Throws std::invalid_argument for dt <= 0.
PiStepResult pi_step(const ErrorState& err, const XChannelGains& gx, const YChannelGains& gy,
                     const PIControllerState& pistate, const FormationSpec& spec, double dt);

// Routh-Hurwitz conditions on the closed-loop cubic of each channel.
// Boundary equality counts as unstable (strict inequalities).
StabilityVerdict check_stability_x(const XChannelGains& gx, double tau_vw);
StabilityVerdict check_stability_y(const YChannelGains& gy, double tau_psiw,
                                   const FormationSpec& spec);

// Closed-loop channel matrices with the PI integral appended as third state
// and leader terms zeroed. States: [x_err, vw_err, int_ex] and
// [y_err, psi_w, int_ey]. Their characteristic polynomials are
//   tau_vw s^3 + (1 + kxp kv) s^2 + (kxp kx + kv kxi) s + kx kxi
//   tau_psiw s^3 + (1 + kyp kpsi - x_r ky kyp) s^2
//     + (kyi kpsi - ky (V_n kyp + x_r kyi)) s - ky kyi V_n
// which is what makes the Routh checks above equivalent to eigenvalue tests.
Mat3 closed_loop_x_matrix(const XChannelGains& gx, double tau_vw);
Mat3 closed_loop_y_matrix(const YChannelGains& gy, double tau_psiw, const FormationSpec& spec);

}  // namespace mbetsim
