#pragma once

#include <stdexcept>
#include <string>

namespace coexist {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data violates a documented model requirement (monotonicity, roots, shapes).
struct spec_violation : error {
    using error::error;
};

// An iterative method failed to reach its tolerance.
struct numerical_failure : error {
    using error::error;
};

// The decreasing and increasing monotone iterations settled on different limits.
struct uniqueness_violation : error {
    using error::error;
};

// A requested perturbation leaves the admissible function class.
struct invalid_perturbation : error {
    using error::error;
};

// Spec-file syntax error with source position (1-based).
struct parse_error : error {
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg), line(line_), col(col_) {}
    int line = 0;
    int col = 0;
};

}  // namespace coexist
