#ifndef LEVICOOL_ERRORS_HPP
#define LEVICOOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levicool {

// Bad physical input (epsilon <= 1, eta outside (0,1], ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally bad config file (unknown key, wrong type, missing section).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// A single trajectory went non-finite or blew past the overflow guard.
// Caught by the ensemble driver and counted as a failed trajectory.
class TrajectoryUnstable : public std::runtime_error {
public:
    explicit TrajectoryUnstable(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical invariant broken (truncation guard, trace drift, singular solve).
// Also counted as a per-trajectory failure by the ensemble driver.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace levicool

#endif
