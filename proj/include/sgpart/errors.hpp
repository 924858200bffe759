#pragma once

#include <stdexcept>

namespace sgpart {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input: empty generator lists, negative bounds, ...
struct InvalidInput : Error {
    using Error::Error;
};

// gaps()/frobenius() need overall gcd 1, otherwise the complement is infinite.
struct NonCoprimeGenerators : Error {
    using Error::Error;
};

// frobenius() when 1 is a generator: the complement is empty.
struct EmptyComplement : Error {
    using Error::Error;
};

// apery_decompose() on a value that is not in the semigroup.
struct NotInSemigroup : Error {
    using Error::Error;
};

// Operation requires the star condition on the generator ordering.
struct StarViolated : Error {
    using Error::Error;
};

// Membership lookup beyond the bound the table was built for.
struct BoundTooSmall : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// Two routes that must always agree disagreed: a bug, not bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

}  // namespace sgpart
