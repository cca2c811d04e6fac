#pragma once

#include <stdexcept>
#include <string>

namespace gasp {

// Argument outside the domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A series that is known to diverge (for example 2F1 at x = 1 with c-a-b <= 0).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coincident or nearly coincident points in a kernel.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative method (series, relaxation) ran out of budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gasp
