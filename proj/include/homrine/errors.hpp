#pragma once

#include <stdexcept>
#include <string>

namespace homrine {

/// Base class for all homrine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or scalar string.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

/// Operands of incompatible dimensions.
struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& msg)
        : Error("dimension mismatch: " + msg) {}
};

/// Division by zero or inversion of a singular map.
struct SingularError : Error {
    explicit SingularError(const std::string& msg) : Error("singular: " + msg) {}
};

/// A family of operators expected to commute does not.
struct NonCommutingError : Error {
    explicit NonCommutingError(const std::string& msg) : Error("non-commuting: " + msg) {}
};

/// Joint eigenspaces do not exhaust the ambient space over the base field.
struct NotDiagonalizableError : Error {
    explicit NotDiagonalizableError(const std::string& msg)
        : Error("not diagonalizable over the base field: " + msg) {}
};

/// The algebra does not split over the base field with respect to the given subalgebra.
struct NotSplitError : Error {
    explicit NotSplitError(const std::string& msg) : Error("not split: " + msg) {}
};

/// The joint zero eigenspace differs from the candidate Cartan subalgebra.
struct CartanMismatchError : Error {
    explicit CartanMismatchError(const std::string& msg) : Error("cartan mismatch: " + msg) {}
};

/// A twist orbit of a functional did not close within the configured bound.
struct OrbitUnboundedError : Error {
    explicit OrbitUnboundedError(const std::string& msg) : Error("orbit unbounded: " + msg) {}
};

/// An operation that needs the root decomposition was called without one.
struct RequiresSplitError : Error {
    explicit RequiresSplitError(const std::string& msg) : Error("requires split: " + msg) {}
};

/// Input data is not a Hom-Lie algebra.
struct InvalidHomLieError : Error {
    explicit InvalidHomLieError(const std::string& msg) : Error("invalid Hom-Lie data: " + msg) {}
};

/// A subspace claimed to be an ideal is not one.
struct NotAnIdealError : Error {
    explicit NotAnIdealError(const std::string& msg) : Error("not an ideal: " + msg) {}
};

/// Unknown corpus entry id.
struct UnknownIdError : Error {
    explicit UnknownIdError(const std::string& msg) : Error("unknown id: " + msg) {}
};

}  // namespace homrine
