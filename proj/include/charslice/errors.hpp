#ifndef CHARSLICE_ERRORS_HPP
#define CHARSLICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charslice {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix/operand shape mismatch.
struct DimensionError : Error {
    using Error::Error;
};

/// Bad argument value (n < 2, even p, ...).
struct ArgumentError : Error {
    using Error::Error;
};

/// A word references a generator the presentation/assignment does not have.
struct LookupError : Error {
    using Error::Error;
};

/// Input data contradicts itself (word exponent sums vs. matrices, |det T| != 1, ...).
struct DataConsistencyError : Error {
    using Error::Error;
};

/// Knot data outside the operation's domain (det(V+U) = 0, ...).
struct InvalidKnotDataError : Error {
    using Error::Error;
};

/// Representation does not sit in the slice required by a lifting map.
struct SliceMismatchError : Error {
    using Error::Error;
};

/// A derived quantity failed a check that should hold for any valid input;
/// signals a bug or corrupted input rather than a user error.
struct InternalConsistencyError : Error {
    using Error::Error;
};

/// Symbolic computation produced something structurally wrong
/// (imaginary content in a certified-real polynomial, zero defect matrix, ...).
struct ComputationError : Error {
    using Error::Error;
};

struct DegenerateWordError : ComputationError {
    using ComputationError::ComputationError;
};

/// A parameter tuple in an enumeration produced no valid representation;
/// the tuple is inadmissible, not a bug.
struct ParameterAdmissibilityError : Error {
    using Error::Error;
};

}  // namespace charslice

#endif
