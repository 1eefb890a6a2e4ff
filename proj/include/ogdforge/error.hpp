#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogdforge {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad alpha, eta root <= 0, ...
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedCombination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModulusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Derivative undefined: hinge margin exactly 1, or ReLU input exactly 0.
class BoundaryViolation : public std::runtime_error {
public:
    enum class Kind { Hinge, Relu };

    BoundaryViolation(Kind k, std::size_t step)
        : std::runtime_error(std::string(k == Kind::Hinge ? "hinge margin exactly 1"
                                                          : "ReLU input exactly 0") +
                             " at step " + std::to_string(step)),
          kind_(k), step_(step) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t step() const noexcept { return step_; }

private:
    Kind kind_;
    std::size_t step_;
};

} // namespace ogdforge
