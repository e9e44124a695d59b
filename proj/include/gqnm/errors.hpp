#pragma once

#include <stdexcept>
#include <string>

namespace gqnm {

/// Rejected argument or configuration value.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Power-matching target that no admissible free parameter can reach.
/// Carries the closest achievable power so callers can report it.
class InfeasiblePower : public std::runtime_error {
public:
    InfeasiblePower(const std::string& what, double achievable_power)
        : std::runtime_error(what), achievable_power_(achievable_power) {}

    double achievable_power() const noexcept { return achievable_power_; }

private:
    double achievable_power_;
};

/// Closed-form result requested for a noise family that has none.
class UnsupportedTheory : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gqnm
