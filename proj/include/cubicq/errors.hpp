#pragma once

#include <stdexcept>
#include <string>

namespace cubicq {

/// Base type for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A divisor class that was expected to be a line class (or a surviving line) is not one.
struct NotALine : Error {
    using Error::Error;
};

/// Two classes scheduled for simultaneous contraction intersect.
struct NotDisjoint : Error {
    using Error::Error;
};

/// Basis images or a label permutation do not define a pairing-preserving
/// lattice map fixing the canonical class.
struct NotIsometry : Error {
    using Error::Error;
};

/// A closure or enumeration grew past its stated bound.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A scenario's Galois image fails to commute with the geometric group.
struct CommutationViolation : Error {
    using Error::Error;
};

/// A cyclic quotient singularity outside the supported table.
struct UnsupportedSingularity : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// A polynomial with a repeated root where a separable one is required.
struct InseparableInput : Error {
    using Error::Error;
};

/// A surface operation that needs the (w, lambda) normal form was called without one.
struct MissingNormalForm : Error {
    using Error::Error;
};

/// Malformed textual or JSON input; the message includes the offending position or key.
struct ParseError : Error {
    using Error::Error;
};

} // namespace cubicq
