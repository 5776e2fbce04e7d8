#include "mbetsim/linear_model.hpp"

#include <cmath>

#include "mbetsim/errors.hpp"

namespace mbetsim {

LinearizedSystem build_linear_system(const FormationSpec& spec,
                                     const AutopilotTimeConstants& tc_leader,
                                     const AutopilotTimeConstants& tc_wingman) {
    LinearizedSystem sys;
    const double tvw = tc_wingman.tau_v;
    const double tpw = tc_wingman.tau_psi;
    const double tvl = tc_leader.tau_v;
    const double tpl = tc_leader.tau_psi;

    // x_err row: coupling into the wingman heading lag through the -y*psidot_W term.
    sys.A[0][1] = -1.0;
    sys.A[0][2] = 1.0;
    sys.A[0][4] = spec.lat_ref / tpw;
    sys.B[0][1] = -spec.lat_ref / tpw;

    sys.A[1][1] = -1.0 / tvw;
    sys.B[1][0] = 1.0 / tvw;

    sys.A[2][2] = -1.0 / tvl;
    sys.E[2][0] = 1.0 / tvl;

    // y_err row: x*psidot_W coupling plus the small-angle heading-error term.
    sys.A[3][4] = spec.nominal_speed - spec.lon_ref / tpw;
    sys.A[3][5] = -spec.nominal_speed;
    sys.B[3][1] = spec.lon_ref / tpw;

    sys.A[4][4] = -1.0 / tpw;
    sys.B[4][1] = 1.0 / tpw;

    sys.A[5][5] = -1.0 / tpl;
    sys.E[5][1] = 1.0 / tpl;

    return sys;
}

ErrorState error_state(const AircraftState& leader, const AircraftState& wingman,
                       const FormationSpec& spec) {
    const RelativeGeometry g = relative_geometry(leader, wingman);
    if (g.degenerate) {
        throw DegenerateRangeError("error_state: range is zero, separations are undefined");
    }
    ErrorState err;
    err.x_err = g.lon_sep - spec.lon_ref;
    err.vw_err = wingman.speed - spec.nominal_speed;
    err.vl_err = leader.speed - spec.nominal_speed;
    err.y_err = g.lat_sep - spec.lat_ref;
    err.psi_w = wingman.heading;
    err.psi_l = leader.heading;
    return err;
}

std::array<double, 6> error_dynamics(const ErrorState& err, const CommandPair& wing_cmd_dev,
                                     const CommandPair& lead_cmd_dev, const FormationSpec& spec,
                                     const AutopilotTimeConstants& tc_leader,
                                     const AutopilotTimeConstants& tc_wingman) {
    const double vl = spec.nominal_speed + err.vl_err;
    const double vw = spec.nominal_speed + err.vw_err;
    const double psi_e = err.psi_l - err.psi_w;
    const double psidot_w = (wing_cmd_dev.heading_cmd - err.psi_w) / tc_wingman.tau_psi;

    std::array<double, 6> out{};
    out[0] = vl * std::cos(psi_e) - vw - (err.y_err + spec.lat_ref) * psidot_w;
    out[1] = (wing_cmd_dev.speed_cmd - err.vw_err) / tc_wingman.tau_v;
    out[2] = (lead_cmd_dev.speed_cmd - err.vl_err) / tc_leader.tau_v;
    out[3] = (err.x_err + spec.lon_ref) * psidot_w - vl * std::sin(psi_e);
    out[4] = psidot_w;
    out[5] = (lead_cmd_dev.heading_cmd - err.psi_l) / tc_leader.tau_psi;
    return out;
}

LinearizedSystem finite_difference_system(const FormationSpec& spec,
                                          const AutopilotTimeConstants& tc_leader,
                                          const AutopilotTimeConstants& tc_wingman, double step) {
    LinearizedSystem sys;
    const ErrorState trim;
    const CommandPair zero{0.0, 0.0};

    for (int j = 0; j < 6; ++j) {
        auto plus = trim.to_array();
        auto minus = trim.to_array();
        plus[j] += step;
        minus[j] -= step;
        const auto fp =
            error_dynamics(ErrorState::from_array(plus), zero, zero, spec, tc_leader, tc_wingman);
        const auto fm =
            error_dynamics(ErrorState::from_array(minus), zero, zero, spec, tc_leader, tc_wingman);
        for (int i = 0; i < 6; ++i) {
            sys.A[i][j] = (fp[i] - fm[i]) / (2.0 * step);
        }
    }

    for (int j = 0; j < 2; ++j) {
        CommandPair up{0.0, 0.0};
        CommandPair um{0.0, 0.0};
        (j == 0 ? up.speed_cmd : up.heading_cmd) = step;
        (j == 0 ? um.speed_cmd : um.heading_cmd) = -step;
        const auto fpB = error_dynamics(trim, up, zero, spec, tc_leader, tc_wingman);
        const auto fmB = error_dynamics(trim, um, zero, spec, tc_leader, tc_wingman);
        const auto fpE = error_dynamics(trim, zero, up, spec, tc_leader, tc_wingman);
        const auto fmE = error_dynamics(trim, zero, um, spec, tc_leader, tc_wingman);
        for (int i = 0; i < 6; ++i) {
            sys.B[i][j] = (fpB[i] - fmB[i]) / (2.0 * step);
            sys.E[i][j] = (fpE[i] - fmE[i]) / (2.0 * step);
        }
    }

    return sys;
}

}  // namespace mbetsim
