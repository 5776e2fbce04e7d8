#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "mbetsim/config.hpp"
#include "mbetsim/errors.hpp"
#include "support/scenarios.hpp"

using namespace mbetsim;
using nlohmann::json;

#ifndef TEST_SOURCE_DIR
#error "TEST_SOURCE_DIR must point at the repository root"
#endif

namespace {

std::string bundled_path() { return std::string(TEST_SOURCE_DIR) + "/configs/paper_example.json"; }

json bundled_json() {
    std::ifstream in(bundled_path());
    REQUIRE(in.good());
    return json::parse(in);
}

// expect parse failure whose message mentions every listed fragment
void expect_reject(const json& doc, std::initializer_list<const char*> fragments) {
    try {
        parse_scenario(doc.dump());
        FAIL_CHECK("expected ConfigError for: " << doc.dump());
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        for (const char* f : fragments) {
            INFO("message: " << msg);
            CHECK(msg.find(f) != std::string::npos);
        }
    }
}

}  // namespace

TEST_CASE("bundled config matches the programmatic scenario") {
    Scenario file = load_scenario(bundled_path());
    Scenario code = scenarios::paper_example();

    CHECK(file.duration == code.duration);
    CHECK(file.dt == code.dt);
    CHECK(file.formation.lon_ref == code.formation.lon_ref);
    CHECK(file.formation.lat_ref == code.formation.lat_ref);
    CHECK(file.formation.nominal_speed == code.formation.nominal_speed);
    CHECK(file.tc_leader.tau_v == code.tc_leader.tau_v);
    CHECK(file.tc_leader.tau_psi == code.tc_leader.tau_psi);
    CHECK(file.tc_wingman.tau_v == code.tc_wingman.tau_v);
    CHECK(file.tc_wingman.tau_psi == code.tc_wingman.tau_psi);
    CHECK(file.x_gains.kxp == code.x_gains.kxp);
    CHECK(file.x_gains.kxi == code.x_gains.kxi);
    CHECK(file.x_gains.kx == code.x_gains.kx);
    CHECK(file.x_gains.kv == code.x_gains.kv);
    CHECK(file.y_gains.kyp == code.y_gains.kyp);
    CHECK(file.y_gains.kyi == code.y_gains.kyi);
    CHECK(file.y_gains.ky == code.y_gains.ky);
    CHECK(file.y_gains.kpsi == code.y_gains.kpsi);
    CHECK(file.trigger.sigma == code.trigger.sigma);
    CHECK((file.trigger.scope == code.trigger.scope));
    CHECK((file.comms_mode == code.comms_mode));
    CHECK(file.leader_init.pos_x == code.leader_init.pos_x);
    CHECK(file.leader_init.pos_y == code.leader_init.pos_y);
    CHECK(file.wingman_init.speed == code.wingman_init.speed);
    REQUIRE(file.leader_schedule.size() == code.leader_schedule.size());
    for (std::size_t i = 0; i < file.leader_schedule.size(); ++i) {
        CHECK(file.leader_schedule[i].time == code.leader_schedule[i].time);
        CHECK(file.leader_schedule[i].cmd.speed_cmd == code.leader_schedule[i].cmd.speed_cmd);
        CHECK(file.leader_schedule[i].cmd.heading_cmd == code.leader_schedule[i].cmd.heading_cmd);
    }
}

TEST_CASE("missing file is reported with its path") {
    try {
        load_scenario("/nonexistent/dir/sim.json");
        FAIL_CHECK("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("cannot read file") != std::string::npos);
        CHECK(std::string(e.what()).find("/nonexistent/dir/sim.json") != std::string::npos);
    }
}

TEST_CASE("malformed JSON is rejected as such") {
    CHECK_THROWS_AS(parse_scenario("{ duration: nope"), ConfigError);
    try {
        parse_scenario("[1, 2, 3]");
        FAIL_CHECK("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("top level must be an object") != std::string::npos);
    }
}

TEST_CASE("missing and unknown keys are named") {
    auto doc = bundled_json();
    doc.erase("trigger");
    expect_reject(doc, {"missing key", "trigger"});

    doc = bundled_json();
    doc["formation"].erase("lon_ref");
    expect_reject(doc, {"missing key", "formation.lon_ref"});

    doc = bundled_json();
    doc["extra_knob"] = 1;
    expect_reject(doc, {"unknown key", "extra_knob"});

    doc = bundled_json();
    doc["trigger"]["shape"] = "round";
    expect_reject(doc, {"unknown key", "trigger.shape"});
}

TEST_CASE("trigger sigma bound is cited") {
    auto doc = bundled_json();
    doc["trigger"]["sigma"] = 1.5;
    expect_reject(doc, {"trigger.sigma", "0 < sigma < 1"});
    doc["trigger"]["sigma"] = 0.0;
    expect_reject(doc, {"trigger.sigma", "0 < sigma < 1"});
}

TEST_CASE("step size must fit inside the duration") {
    auto doc = bundled_json();
    doc["dt"] = 1000.0;
    expect_reject(doc, {"dt", "0 < dt <= duration"});
    doc["dt"] = -0.01;
    expect_reject(doc, {"dt"});
}

TEST_CASE("physical bounds on states and lags") {
    auto doc = bundled_json();
    doc["leader_init"]["speed"] = -2.0;
    expect_reject(doc, {"leader_init.speed", ">= 0"});

    doc = bundled_json();
    doc["wingman_autopilot"]["tau_psi"] = 0.0;
    expect_reject(doc, {"wingman_autopilot.tau_psi", "> 0"});

    doc = bundled_json();
    doc["formation"]["nominal_speed"] = 0.0;
    expect_reject(doc, {"formation.nominal_speed", "> 0"});
}

TEST_CASE("schedule shape is validated") {
    auto doc = bundled_json();
    doc["leader_schedule"] = json::array();
    expect_reject(doc, {"leader_schedule", "non-empty"});

    doc = bundled_json();
    doc["leader_schedule"][0]["time"] = 3.0;
    expect_reject(doc, {"leader_schedule[0].time", "first entry"});

    doc = bundled_json();
    doc["leader_schedule"][1]["time"] = -1.0;
    expect_reject(doc, {"leader_schedule[1].time", "non-decreasing"});
}

TEST_CASE("enumerations reject unknown names") {
    auto doc = bundled_json();
    doc["comms_mode"] = "telepathy";
    expect_reject(doc, {"comms_mode"});

    doc = bundled_json();
    doc["trigger"]["norm_scope"] = "position_only";
    expect_reject(doc, {"trigger.norm_scope"});
}

TEST_CASE("type errors name the key") {
    auto doc = bundled_json();
    doc["duration"] = "long";
    expect_reject(doc, {"duration", "must be a number"});
}

TEST_CASE("optional keys default sensibly") {
    auto doc = bundled_json();
    doc.erase("comms_mode");
    doc["trigger"].erase("norm_scope");
    Scenario s = parse_scenario(doc.dump());
    CHECK((s.comms_mode == CommsMode::event_triggered));
    CHECK((s.trigger.scope == NormScope::full_state));

    doc = bundled_json();
    doc["comms_mode"] = "continuous";
    CHECK((parse_scenario(doc.dump()).comms_mode == CommsMode::continuous));
    doc["comms_mode"] = "sigma_zero";
    CHECK((parse_scenario(doc.dump()).comms_mode == CommsMode::sigma_zero));
    doc = bundled_json();
    doc["trigger"]["norm_scope"] = "velocity_heading";
    CHECK((parse_scenario(doc.dump()).trigger.scope == NormScope::velocity_heading));
}
