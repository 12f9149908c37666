#ifndef QEXPAND_ERRORS_HPP
#define QEXPAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qexpand
{

// Newton or series evaluation failed to settle at the requested precision.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad request: gcd(h,k) != 1, negative sizes, conductor mismatch, out of domain.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A fractional power was asked for with its base on the cut (-inf, 0].
struct branch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qexpand

#endif
