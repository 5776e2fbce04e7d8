#include "mbetsim/pi_control.hpp"

#include <stdexcept>

namespace mbetsim {

ChannelErrors channel_errors(const ErrorState& err, const XChannelGains& gx,
                             const YChannelGains& gy) {
    ChannelErrors e;
    e.ex = gx.kx * err.x_err + gx.kv * (err.vl_err - err.vw_err);
    e.ey = gy.ky * err.y_err + gy.kpsi * (err.psi_l - err.psi_w);
    return e;
}

PiStepResult pi_step(const ErrorState& err, const XChannelGains& gx, const YChannelGains& gy,
                     const PIControllerState& pistate, const FormationSpec& spec, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("pi_step: dt must be positive");
    }
    const ChannelErrors e = channel_errors(err, gx, gy);

    PiStepResult out;
    out.state.int_ex = pistate.int_ex + 0.5 * dt * (pistate.prev_ex + e.ex);
    out.state.int_ey = pistate.int_ey + 0.5 * dt * (pistate.prev_ey + e.ey);
    out.state.prev_ex = e.ex;
    out.state.prev_ey = e.ey;

    const double dv = gx.kxp * e.ex + gx.kxi * out.state.int_ex;
    const double dpsi = gy.kyp * e.ey + gy.kyi * out.state.int_ey;
    out.cmd.speed_cmd = spec.nominal_speed + dv;
    out.cmd.heading_cmd = dpsi;
    return out;
}

namespace {

StabilityCondition make_condition(std::string label, double lhs, double rhs, bool gt) {
    StabilityCondition c;
    c.label = std::move(label);
    c.lhs = lhs;
    c.rhs = rhs;
    c.satisfied = gt ? (lhs > rhs) : (lhs < rhs);
    return c;
}

}  // namespace

StabilityVerdict check_stability_x(const XChannelGains& gx, double tau_vw) {
    StabilityVerdict v;
    const double c1 = gx.kxp * gx.kv + 1.0;
    v.conditions[0] = make_condition("kxp*kv + 1 > 0", c1, 0.0, true);
    v.conditions[1] = make_condition("kx*kxi > 0", gx.kx * gx.kxi, 0.0, true);
    // Third inequality divides by c1; when c1 <= 0 the channel is already
    // unstable, so evaluate the comparison only on a positive denominator.
    double lhs3 = gx.kxp * gx.kx + gx.kv * gx.kxi;
    double rhs3 = c1 > 0.0 ? tau_vw * gx.kx * gx.kxi / c1 : lhs3;
    v.conditions[2] = make_condition("kxp*kx + kv*kxi > tau_vw*kx*kxi/(kxp*kv+1)", lhs3, rhs3,
                                     true);
    if (c1 <= 0.0) {
        v.conditions[2].satisfied = false;
    }
    v.stable = v.conditions[0].satisfied && v.conditions[1].satisfied && v.conditions[2].satisfied;
    return v;
}

StabilityVerdict check_stability_y(const YChannelGains& gy, double tau_psiw,
                                   const FormationSpec& spec) {
    StabilityVerdict v;
    const double xr = spec.lon_ref;
    const double vn = spec.nominal_speed;
    const double c1 = gy.kyp * gy.kpsi - xr * gy.ky * gy.kyp + 1.0;
    v.conditions[0] = make_condition("kyp*kpsi - x_r*ky*kyp + 1 > 0", c1, 0.0, true);
    v.conditions[1] = make_condition("ky*kyi < 0", gy.ky * gy.kyi, 0.0, false);
    double lhs3 = gy.kyi * gy.kpsi - gy.ky * (vn * gy.kyp + xr * gy.kyi);
    double rhs3 = c1 > 0.0 ? -tau_psiw * vn * gy.ky * gy.kyi / c1 : lhs3;
    v.conditions[2] = make_condition(
        "kyi*kpsi - ky*(V_n*kyp + x_r*kyi) > -tau_psiw*V_n*ky*kyi/(kyp*kpsi - x_r*ky*kyp + 1)",
        lhs3, rhs3, true);
    if (c1 <= 0.0) {
        v.conditions[2].satisfied = false;
    }
    v.stable = v.conditions[0].satisfied && v.conditions[1].satisfied && v.conditions[2].satisfied;
    return v;
}

Mat3 closed_loop_x_matrix(const XChannelGains& gx, double tau_vw) {
    // States [x_err, vw_err, int_ex] under xdot = vl - vw with leader terms
    // zeroed, the speed lag driven by the PI command, and int_ex' = e_x.
    Mat3 m{};
    m[0][0] = 0.0;
    m[0][1] = -1.0;
    m[0][2] = 0.0;
    m[1][0] = gx.kxp * gx.kx / tau_vw;
    m[1][1] = -(1.0 + gx.kxp * gx.kv) / tau_vw;
    m[1][2] = gx.kxi / tau_vw;
    m[2][0] = gx.kx;
    m[2][1] = -gx.kv;
    m[2][2] = 0.0;
    return m;
}

Mat3 closed_loop_y_matrix(const YChannelGains& gy, double tau_psiw, const FormationSpec& spec) {
    // States [y_err, psi_w, int_ey]; ydot couples through both the x_r*psidot_W
    // term (which injects the heading command) and the V_n small-angle term.
    const double xr = spec.lon_ref;
    const double vn = spec.nominal_speed;
    Mat3 m{};
    m[0][0] = xr * gy.kyp * gy.ky / tau_psiw;
    m[0][1] = vn - xr / tau_psiw - xr * gy.kyp * gy.kpsi / tau_psiw;
    m[0][2] = xr * gy.kyi / tau_psiw;
    m[1][0] = gy.kyp * gy.ky / tau_psiw;
    m[1][1] = -(1.0 + gy.kyp * gy.kpsi) / tau_psiw;
    m[1][2] = gy.kyi / tau_psiw;
    m[2][0] = gy.ky;
    m[2][1] = -gy.kpsi;
    m[2][2] = 0.0;
    return m;
}

}  // namespace mbetsim
