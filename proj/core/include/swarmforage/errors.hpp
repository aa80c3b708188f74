#pragma once

#include <stdexcept>
#include <string>

namespace swarmforage {

/// Bad experiment or simulation configuration; carries the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Contract violation inside a running simulation (e.g. ticking a dead robot).
class SimulationFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A metric is undefined for the given record (zero time, zero energy).
class MetricError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace swarmforage
