#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbetsim {

// Scenario configuration rejected; what() names the offending key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Leader and wingman coincide: bearing undefined, 1/R terms blow up.
class DegenerateRangeError : public std::runtime_error {
public:
    explicit DegenerateRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulation cannot continue (non-finite state or degenerate geometry mid-run).
class SimulationAbort : public std::runtime_error {
public:
    SimulationAbort(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace mbetsim
