#pragma once

#include <stdexcept>
#include <string>

namespace cantornet {

// Thrown when an argument is outside the mathematical domain of an operation
// (negative activation input, scalar coordinate outside [0,1], ...).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a weight matrix fails the positivity / sum-range requirements.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by project() when the state is too far from the invariant ray.
class not_on_line_error : public std::runtime_error {
public:
    explicit not_on_line_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

// Thrown when the sensitivity probe exhausts max_k without capturing the
// discontinuity; signals the start point is too far from the attractor or
// max_k is too small.
class capture_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cantornet
