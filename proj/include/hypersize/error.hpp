#pragma once

#include <stdexcept>
#include <string>

namespace hypersize {

// A configuration value violates a model invariant. field() is the dotted
// path of the offending entry, e.g. "traffic.saturation_load".
class InvalidConfig : public std::invalid_argument {
public:
    InvalidConfig(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A valid configuration that cannot be evaluated by the requested operation.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedComposition : public EvaluationError {
public:
    using EvaluationError::EvaluationError;
};

class NoCrossing : public EvaluationError {
public:
    NoCrossing(const std::string& what, double lo_value, double hi_value, double target)
        : EvaluationError(what), lo_value_(lo_value), hi_value_(hi_value), target_(target) {}

    double lo_value() const noexcept { return lo_value_; }
    double hi_value() const noexcept { return hi_value_; }
    double target() const noexcept { return target_; }

private:
    double lo_value_;
    double hi_value_;
    double target_;
};

} // namespace hypersize
