#pragma once

#include <string>

#include "mbetsim/sim_engine.hpp"

namespace mbetsim {

// Loads and validates a scenario JSON file. Unknown keys are rejected and
// every violation message names the offending key (dotted path).
// Throws ConfigError.
Scenario load_scenario(const std::string& path);

// Same validation applied to an in-memory JSON document.
Scenario parse_scenario(const std::string& json_text);

}  // namespace mbetsim
