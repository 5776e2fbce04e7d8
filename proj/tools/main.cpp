#include <cmath>
#include <exception>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mbetsim/config.hpp"
#include "mbetsim/errors.hpp"
#include "mbetsim/linear_model.hpp"
#include "mbetsim/pi_control.hpp"
#include "mbetsim/sim_engine.hpp"

namespace {

// Exit codes: 0 success, 1 failed check (check-gains / lincheck),
// 2 configuration error, 3 simulation or output failure.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitRunFailure = 3;

void print_verdict(const char* channel, const mbetsim::StabilityVerdict& v) {
    std::cout << channel << ":\n";
    for (const auto& c : v.conditions) {
        std::cout << "  [" << (c.satisfied ? "PASS" : "FAIL") << "] " << c.label
                  << "  (lhs=" << std::setprecision(9) << c.lhs << ", rhs=" << c.rhs << ")\n";
    }
}

int cmd_simulate(const std::string& config_path, const std::string& out_prefix,
                 bool sigma_given, double sigma) {
    mbetsim::Scenario sc;
    try {
        sc = mbetsim::load_scenario(config_path);
        if (sigma_given) {
            if (sigma == 0.0) {
                sc.comms_mode = mbetsim::CommsMode::sigma_zero;
            } else if (sigma > 0.0 && sigma < 1.0) {
                sc.trigger.sigma = sigma;
            } else {
                throw mbetsim::ConfigError(
                    "config: --sigma must satisfy 0 <= sigma < 1 (0 selects the sigma_zero mode)");
            }
        }
    } catch (const mbetsim::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    }

    const auto vx = mbetsim::check_stability_x(sc.x_gains, sc.tc_wingman.tau_v);
    const auto vy = mbetsim::check_stability_y(sc.y_gains, sc.tc_wingman.tau_psi, sc.formation);
    if (!vx.stable || !vy.stable) {
        std::cerr << "warning: gains fail the stability conditions; simulating anyway\n";
    }

    try {
        const mbetsim::SimulationResult result = mbetsim::run_scenario(sc);
        const mbetsim::SummaryReport rep = mbetsim::summarize(result.log, result.events);
        mbetsim::write_trajectory_csv_file(out_prefix + "_traj.csv", result.log);
        mbetsim::write_events_csv_file(out_prefix + "_events.csv", result.events);
        mbetsim::write_summary_file(out_prefix + "_summary.txt", rep);
        std::cout << "wrote " << out_prefix << "_traj.csv, " << out_prefix << "_events.csv, "
                  << out_prefix << "_summary.txt\n";
        std::cout << std::setprecision(9) << "final separation error (lon, lat): ("
                  << rep.final_lon_err << ", " << rep.final_lat_err << ") m over "
                  << rep.steps << " steps; " << rep.event_count
                  << " events (ratio " << rep.comm_ratio << ")\n";
        return kExitOk;
    } catch (const mbetsim::SimulationAbort& e) {
        std::cerr << "simulation aborted at step " << e.step() << ": " << e.what() << '\n';
        return kExitRunFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
}

int cmd_check_gains(const std::string& config_path) {
    mbetsim::Scenario sc;
    try {
        sc = mbetsim::load_scenario(config_path);
    } catch (const mbetsim::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    }
    const auto vx = mbetsim::check_stability_x(sc.x_gains, sc.tc_wingman.tau_v);
    const auto vy = mbetsim::check_stability_y(sc.y_gains, sc.tc_wingman.tau_psi, sc.formation);
    print_verdict("x-channel", vx);
    print_verdict("y-channel", vy);
    const bool ok = vx.stable && vy.stable;
    std::cout << (ok ? "all conditions satisfied" : "gain conditions violated") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_lincheck(const std::string& config_path) {
    mbetsim::Scenario sc;
    try {
        sc = mbetsim::load_scenario(config_path);
    } catch (const mbetsim::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfigError;
    }
    const mbetsim::LinearizedSystem hand =
        mbetsim::build_linear_system(sc.formation, sc.tc_leader, sc.tc_wingman);
    const mbetsim::LinearizedSystem fd =
        mbetsim::finite_difference_system(sc.formation, sc.tc_leader, sc.tc_wingman);

    double max_a = 0.0;
    double max_b = 0.0;
    double max_e = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            max_a = std::max(max_a, std::fabs(hand.A[i][j] - fd.A[i][j]));
        }
        for (int j = 0; j < 2; ++j) {
            max_b = std::max(max_b, std::fabs(hand.B[i][j] - fd.B[i][j]));
            max_e = std::max(max_e, std::fabs(hand.E[i][j] - fd.E[i][j]));
        }
    }
    constexpr double tol = 1e-6;
    std::cout << std::setprecision(9) << "max |A_fd - A| = " << max_a << '\n'
              << "max |B_fd - B| = " << max_b << '\n'
              << "max |E_fd - E| = " << max_e << '\n';
    const bool ok = max_a < tol && max_b < tol && max_e < tol;
    std::cout << (ok ? "linearization matches finite differences" : "linearization mismatch")
              << " (tolerance " << tol << ")\n";
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leader-wingman formation simulator with event-triggered communication"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_prefix;
    double sigma = 0.0;

    CLI::App* sim = app.add_subcommand(
        "simulate", "Run a scenario; write <prefix>_traj.csv, _events.csv, _summary.txt");
    sim->add_option("--config", config_path, "scenario JSON file")->required();
    sim->add_option("--out", out_prefix, "output file prefix")->required();
    CLI::Option* sigma_opt = sim->add_option(
        "--sigma", sigma, "override the trigger threshold; 0 selects the sigma_zero mode");

    CLI::App* chk =
        app.add_subcommand("check-gains", "Evaluate the per-channel gain stability conditions");
    chk->add_option("--config", config_path, "scenario JSON file")->required();

    CLI::App* lin = app.add_subcommand(
        "lincheck", "Compare the hand-coded linearization against finite differences");
    lin->add_option("--config", config_path, "scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (sim->parsed()) {
        return cmd_simulate(config_path, out_prefix, sigma_opt->count() > 0, sigma);
    }
    if (chk->parsed()) {
        return cmd_check_gains(config_path);
    }
    return cmd_lincheck(config_path);
}
