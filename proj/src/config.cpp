#include "mbetsim/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mbetsim/errors.hpp"

namespace mbetsim {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config: key \"" + path + "\" " + what);
}

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const std::string_view a : allowed) {
            if (item.key() == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("config: unknown key \"" + join(prefix, item.key()) + "\"");
        }
    }
}

const json& require(const json& obj, const std::string& prefix, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError("config: missing key \"" + join(prefix, key) + "\"");
    }
    return *it;
}

double get_num(const json& obj, const std::string& prefix, const char* key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_number()) {
        fail(join(prefix, key), "must be a number");
    }
    return v.get<double>();
}

std::string get_str(const json& obj, const std::string& prefix, const char* key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_string()) {
        fail(join(prefix, key), "must be a string");
    }
    return v.get<std::string>();
}

const json& get_obj(const json& obj, const std::string& prefix, const char* key) {
    const json& v = require(obj, prefix, key);
    if (!v.is_object()) {
        fail(join(prefix, key), "must be an object");
    }
    return v;
}

AircraftState parse_state(const json& obj, const std::string& prefix) {
    reject_unknown(obj, prefix, {"pos_x", "pos_y", "speed", "heading"});
    AircraftState s;
    s.pos_x = get_num(obj, prefix, "pos_x");
    s.pos_y = get_num(obj, prefix, "pos_y");
    s.speed = get_num(obj, prefix, "speed");
    s.heading = get_num(obj, prefix, "heading");
    if (s.speed < 0.0) {
        fail(join(prefix, "speed"), "must be >= 0");
    }
    return s;
}

AutopilotTimeConstants parse_autopilot(const json& obj, const std::string& prefix) {
    reject_unknown(obj, prefix, {"tau_v", "tau_psi"});
    AutopilotTimeConstants tc;
    tc.tau_v = get_num(obj, prefix, "tau_v");
    tc.tau_psi = get_num(obj, prefix, "tau_psi");
    if (tc.tau_v <= 0.0) {
        fail(join(prefix, "tau_v"), "must be > 0");
    }
    if (tc.tau_psi <= 0.0) {
        fail(join(prefix, "tau_psi"), "must be > 0");
    }
    return tc;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    reject_unknown(doc, "",
                   {"duration", "dt", "formation", "leader_autopilot", "wingman_autopilot",
                    "x_gains", "y_gains", "trigger", "comms_mode", "leader_init", "wingman_init",
                    "leader_schedule"});

    Scenario s;
    s.duration = get_num(doc, "", "duration");
    if (s.duration <= 0.0) {
        fail("duration", "must be > 0");
    }
    s.dt = get_num(doc, "", "dt");
    if (s.dt <= 0.0 || s.dt > s.duration) {
        fail("dt", "must satisfy 0 < dt <= duration");
    }

    {
        const json& f = get_obj(doc, "", "formation");
        reject_unknown(f, "formation", {"lon_ref", "lat_ref", "nominal_speed"});
        s.formation.lon_ref = get_num(f, "formation", "lon_ref");
        s.formation.lat_ref = get_num(f, "formation", "lat_ref");
        s.formation.nominal_speed = get_num(f, "formation", "nominal_speed");
        if (s.formation.nominal_speed <= 0.0) {
            fail("formation.nominal_speed", "must be > 0");
        }
    }

    s.tc_leader = parse_autopilot(get_obj(doc, "", "leader_autopilot"), "leader_autopilot");
    s.tc_wingman = parse_autopilot(get_obj(doc, "", "wingman_autopilot"), "wingman_autopilot");

    {
        const json& g = get_obj(doc, "", "x_gains");
        reject_unknown(g, "x_gains", {"kxp", "kxi", "kx", "kv"});
        s.x_gains.kxp = get_num(g, "x_gains", "kxp");
        s.x_gains.kxi = get_num(g, "x_gains", "kxi");
        s.x_gains.kx = get_num(g, "x_gains", "kx");
        s.x_gains.kv = get_num(g, "x_gains", "kv");
    }
    {
        const json& g = get_obj(doc, "", "y_gains");
        reject_unknown(g, "y_gains", {"kyp", "kyi", "ky", "kpsi"});
        s.y_gains.kyp = get_num(g, "y_gains", "kyp");
        s.y_gains.kyi = get_num(g, "y_gains", "kyi");
        s.y_gains.ky = get_num(g, "y_gains", "ky");
        s.y_gains.kpsi = get_num(g, "y_gains", "kpsi");
    }

    {
        const json& t = get_obj(doc, "", "trigger");
        reject_unknown(t, "trigger", {"sigma", "norm_scope"});
        s.trigger.sigma = get_num(t, "trigger", "sigma");
        if (!(s.trigger.sigma > 0.0 && s.trigger.sigma < 1.0)) {
            fail("trigger.sigma", "must satisfy 0 < sigma < 1");
        }
        if (t.contains("norm_scope")) {
            const std::string scope = get_str(t, "trigger", "norm_scope");
            if (scope == "full_state") {
                s.trigger.scope = NormScope::full_state;
            } else if (scope == "velocity_heading") {
                s.trigger.scope = NormScope::velocity_heading;
            } else {
                fail("trigger.norm_scope", "must be \"full_state\" or \"velocity_heading\"");
            }
        }
    }

    if (doc.contains("comms_mode")) {
        const std::string mode = get_str(doc, "", "comms_mode");
        if (mode == "event_triggered") {
            s.comms_mode = CommsMode::event_triggered;
        } else if (mode == "sigma_zero") {
            s.comms_mode = CommsMode::sigma_zero;
        } else if (mode == "continuous") {
            s.comms_mode = CommsMode::continuous;
        } else {
            fail("comms_mode", "must be \"event_triggered\", \"sigma_zero\" or \"continuous\"");
        }
    }

    s.leader_init = parse_state(get_obj(doc, "", "leader_init"), "leader_init");
    s.wingman_init = parse_state(get_obj(doc, "", "wingman_init"), "wingman_init");

    {
        const json& arr = require(doc, "", "leader_schedule");
        if (!arr.is_array() || arr.empty()) {
            fail("leader_schedule", "must be a non-empty array");
        }
        double prev_time = 0.0;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string prefix = "leader_schedule[" + std::to_string(i) + "]";
            const json& entry = arr[i];
            if (!entry.is_object()) {
                fail(prefix, "must be an object");
            }
            reject_unknown(entry, prefix, {"time", "speed_cmd", "heading_cmd"});
            ScheduleEntry e;
            e.time = get_num(entry, prefix, "time");
            e.cmd.speed_cmd = get_num(entry, prefix, "speed_cmd");
            e.cmd.heading_cmd = get_num(entry, prefix, "heading_cmd");
            if (i == 0 && e.time != 0.0) {
                fail(prefix + ".time", "must be 0 for the first entry");
            }
            if (i > 0 && e.time < prev_time) {
                fail(prefix + ".time", "must be non-decreasing");
            }
            prev_time = e.time;
            s.leader_schedule.push_back(e);
        }
    }

    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace mbetsim
