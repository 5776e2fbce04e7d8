#include "mbetsim/sim_engine.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "mbetsim/errors.hpp"
#include "mbetsim/linear_model.hpp"

namespace mbetsim {

namespace {

bool finite_state(const AircraftState& s) {
    return std::isfinite(s.pos_x) && std::isfinite(s.pos_y) && std::isfinite(s.speed) &&
           std::isfinite(s.heading);
}

void validate(const Scenario& s) {
    if (!(s.duration > 0.0)) {
        throw std::invalid_argument("scenario: duration must be positive");
    }
    if (!(s.dt > 0.0) || s.dt > s.duration) {
        throw std::invalid_argument("scenario: dt must satisfy 0 < dt <= duration");
    }
    if (!(s.tc_leader.tau_v > 0.0) || !(s.tc_leader.tau_psi > 0.0) ||
        !(s.tc_wingman.tau_v > 0.0) || !(s.tc_wingman.tau_psi > 0.0)) {
        throw std::invalid_argument("scenario: autopilot time constants must be positive");
    }
    if (s.leader_schedule.empty() || s.leader_schedule.front().time != 0.0) {
        throw std::invalid_argument("scenario: leader schedule needs a first entry at t=0");
    }
    for (std::size_t i = 1; i < s.leader_schedule.size(); ++i) {
        if (s.leader_schedule[i].time < s.leader_schedule[i - 1].time) {
            throw std::invalid_argument("scenario: schedule times must be non-decreasing");
        }
    }
    if (s.comms_mode == CommsMode::event_triggered &&
        !(s.trigger.sigma > 0.0 && s.trigger.sigma < 1.0)) {
        throw std::invalid_argument("scenario: trigger sigma must lie in (0, 1)");
    }
}

}  // namespace

SimulationResult run_scenario(const Scenario& s) {
    validate(s);

    const StabilityVerdict vx = check_stability_x(s.x_gains, s.tc_wingman.tau_v);
    const StabilityVerdict vy = check_stability_y(s.y_gains, s.tc_wingman.tau_psi, s.formation);

    SimulationResult out;
    const auto nsteps = static_cast<std::size_t>(std::floor(s.duration / s.dt + 1e-9));
    out.log.formation = s.formation;
    out.log.dt = s.dt;
    out.log.stable_gains = vx.stable && vy.stable;
    out.log.rows.reserve(nsteps + 1);

    AircraftState leader = s.leader_init;
    AircraftState wingman = s.wingman_init;
    LeaderModel model{s.leader_init, 0.0};

    TriggerConfig trig = s.trigger;
    if (s.comms_mode == CommsMode::sigma_zero) {
        trig.sigma = 0.0;  // fires exactly when the model error is nonzero
    }

    const auto controller_error = [&](const AircraftState& lead_src,
                                      std::size_t step) -> ErrorState {
        try {
            return error_state(lead_src, wingman, s.formation);
        } catch (const DegenerateRangeError&) {
            throw SimulationAbort("aircraft coincide: controller geometry undefined", step);
        }
    };

    // Trapezoid memory starts from the true t=0 channel errors; the model
    // equals the leader state at t=0 so all comms modes seed identically.
    PIControllerState pist;
    {
        const ChannelErrors e0 =
            channel_errors(controller_error(model.est, 0), s.x_gains, s.y_gains);
        pist.prev_ex = e0.ex;
        pist.prev_ey = e0.ey;
    }

    {
        TrajectoryRow r0;
        r0.t = 0.0;
        r0.leader = leader;
        r0.wingman = wingman;
        r0.geom = relative_geometry(leader, wingman);
        r0.wing_cmd = CommandPair{s.formation.nominal_speed, 0.0};
        out.log.rows.push_back(r0);
    }

    std::size_t sched_idx = 0;
    for (std::size_t k = 0; k < nsteps; ++k) {
        const double t = static_cast<double>(k) * s.dt;
        const double t_next = static_cast<double>(k + 1) * s.dt;

        while (sched_idx + 1 < s.leader_schedule.size() &&
               s.leader_schedule[sched_idx + 1].time <= t + 1e-9) {
            ++sched_idx;
        }
        const CommandPair lead_cmd = s.leader_schedule[sched_idx].cmd;

        leader = integrate_step(leader, lead_cmd, s.tc_leader, s.dt);

        TriggerDecision dec;
        if (s.comms_mode != CommsMode::continuous) {
            model = propagate_model(model, s.tc_leader, s.dt);
            dec = check_trigger(model, leader, trig);
            if (dec.fire) {
                const UpdateResult upd = apply_update(model, leader, t_next, dec);
                model = upd.model;
                out.events.push_back(upd.record);
            }
        }

        const AircraftState& lead_for_ctrl =
            s.comms_mode == CommsMode::continuous ? leader : model.est;
        const ErrorState err = controller_error(lead_for_ctrl, k + 1);
        const PiStepResult pi = pi_step(err, s.x_gains, s.y_gains, pist, s.formation, s.dt);
        pist = pi.state;

        wingman = integrate_step(wingman, pi.cmd, s.tc_wingman, s.dt);

        if (!finite_state(leader) || !finite_state(wingman)) {
            throw SimulationAbort("non-finite aircraft state", k + 1);
        }

        TrajectoryRow r;
        r.t = t_next;
        r.leader = leader;
        r.wingman = wingman;
        r.geom = relative_geometry(leader, wingman);
        if (r.geom.degenerate) {
            throw SimulationAbort("aircraft coincide: range is zero", k + 1);
        }
        r.wing_cmd = pi.cmd;
        r.model_error_norm = dec.error_norm;
        r.trigger_threshold = dec.threshold;
        r.event = dec.fire;
        out.log.rows.push_back(r);
    }

    return out;
}

SummaryReport summarize(const TrajectoryLog& log, const std::vector<EventRecord>& events,
                        double settle_band) {
    if (log.rows.empty()) {
        throw std::invalid_argument("summarize: log has no rows");
    }
    SummaryReport rep;
    rep.steps = log.rows.size() - 1;
    rep.dt = log.dt;
    rep.settle_band = settle_band;
    rep.stable_gains = log.stable_gains;

    for (const TrajectoryRow& r : log.rows) {
        if (std::fabs(r.geom.lon_sep - log.formation.lon_ref) > settle_band) {
            rep.settle_time_lon = r.t;
        }
        if (std::fabs(r.geom.lat_sep - log.formation.lat_ref) > settle_band) {
            rep.settle_time_lat = r.t;
        }
    }
    const TrajectoryRow& last = log.rows.back();
    rep.final_lon_err = last.geom.lon_sep - log.formation.lon_ref;
    rep.final_lat_err = last.geom.lat_sep - log.formation.lat_ref;

    rep.event_count = events.size();
    if (events.size() >= 2) {
        double sum = 0.0;
        double mn = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < events.size(); ++i) {
            const double gap = events[i].time - events[i - 1].time;
            sum += gap;
            mn = std::min(mn, gap);
        }
        rep.mean_interevent = sum / static_cast<double>(events.size() - 1);
        rep.min_interevent = mn;
    }
    rep.comm_ratio =
        rep.steps > 0 ? static_cast<double>(events.size()) / static_cast<double>(rep.steps) : 0.0;
    return rep;
}

namespace {

std::string fmt9(double v) {
    if (v == 0.0) {
        v = 0.0;  // canonicalize -0 so output is byte-stable
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log) {
    os << "t,xL,yL,VL,psiL,xW,yW,VW,psiW,R,lambda,sepx,sepy,VWc,psiWc,enorm,ethresh,event\n";
    for (const TrajectoryRow& r : log.rows) {
        os << fmt9(r.t) << ',' << fmt9(r.leader.pos_x) << ',' << fmt9(r.leader.pos_y) << ','
           << fmt9(r.leader.speed) << ',' << fmt9(r.leader.heading) << ',' << fmt9(r.wingman.pos_x)
           << ',' << fmt9(r.wingman.pos_y) << ',' << fmt9(r.wingman.speed) << ','
           << fmt9(r.wingman.heading) << ',' << fmt9(r.geom.range) << ',' << fmt9(r.geom.bearing)
           << ',' << fmt9(r.geom.lon_sep) << ',' << fmt9(r.geom.lat_sep) << ','
           << fmt9(r.wing_cmd.speed_cmd) << ',' << fmt9(r.wing_cmd.heading_cmd) << ','
           << fmt9(r.model_error_norm) << ',' << fmt9(r.trigger_threshold) << ','
           << (r.event ? '1' : '0') << '\n';
    }
}

void write_events_csv(std::ostream& os, const std::vector<EventRecord>& events) {
    os << "t,enorm,ethresh\n";
    for (const EventRecord& e : events) {
        os << fmt9(e.time) << ',' << fmt9(e.error_norm) << ',' << fmt9(e.threshold) << '\n';
    }
}

void write_summary(std::ostream& os, const SummaryReport& rep) {
    os << "steps: " << rep.steps << '\n';
    os << "dt: " << fmt9(rep.dt) << '\n';
    os << "settle_band: " << fmt9(rep.settle_band) << '\n';
    os << "settle_time_lon: " << fmt9(rep.settle_time_lon) << '\n';
    os << "settle_time_lat: " << fmt9(rep.settle_time_lat) << '\n';
    os << "final_lon_err: " << fmt9(rep.final_lon_err) << '\n';
    os << "final_lat_err: " << fmt9(rep.final_lat_err) << '\n';
    os << "event_count: " << rep.event_count << '\n';
    os << "mean_interevent: " << fmt9(rep.mean_interevent) << '\n';
    os << "min_interevent: " << fmt9(rep.min_interevent) << '\n';
    os << "comm_ratio: " << fmt9(rep.comm_ratio) << '\n';
    os << "stable_gains: " << (rep.stable_gains ? "true" : "false") << '\n';
}

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    return os;
}

}  // namespace

void write_trajectory_csv_file(const std::string& path, const TrajectoryLog& log) {
    auto os = open_or_throw(path);
    write_trajectory_csv(os, log);
    if (!os.good()) {
        throw std::runtime_error("write failed: " + path);
    }
}

void write_events_csv_file(const std::string& path, const std::vector<EventRecord>& events) {
    auto os = open_or_throw(path);
    write_events_csv(os, events);
    if (!os.good()) {
        throw std::runtime_error("write failed: " + path);
    }
}

void write_summary_file(const std::string& path, const SummaryReport& report) {
    auto os = open_or_throw(path);
    write_summary(os, report);
    if (!os.good()) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace mbetsim
