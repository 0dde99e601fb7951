#pragma once

#include <stdexcept>

namespace qrr {

// A formal infinite product whose factors do not converge as a series.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion of a series whose leading coefficient is not a unit.
struct non_unit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent internal computations of the same object disagree.
// This always indicates a bug, never bad input.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lattice term produced a negative or non-integral exponent, or a sign
// rule's divisibility assumption failed: the sum is mis-parametrized.
struct integrality_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An alphabet/variable specialization makes a denominator vanish.
struct specialization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked for more than it can enumerate.
struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qrr
