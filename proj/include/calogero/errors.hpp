#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace calogero {

// Bad construction parameters (N < 2 and the like).
struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally wrong input (dimension mismatch, unknown pair, zero vector).
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A potential or chart evaluation hit a collision hyperplane y·b^a = 0.
// pair is the offending (i, j) when known, (0, 0) otherwise.
struct SingularConfigurationError : std::domain_error {
    std::pair<int, int> pair{0, 0};
    explicit SingularConfigurationError(const std::string& what,
                                        std::pair<int, int> offending = {0, 0})
        : std::domain_error(what), pair(offending) {}
};

// Spherical chart evaluated at a pole (sin(theta) below tolerance).
struct ChartSingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

// solve_I denominator 16h^3 - 2f^2 too close to zero.
struct DegenerateDenominatorError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace calogero
