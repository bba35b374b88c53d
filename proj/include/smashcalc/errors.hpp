#pragma once

#include <stdexcept>
#include <string>

namespace smashcalc {

enum class ErrorKind {
    DivisionByZero,
    PoleAtPoint,
    DimensionMismatch,
    DegreeCapExceeded,
    NonOrientable,
    SingularAntipode,
    NotEquivariant,
    NotBicovariant,
    InconsistentDifferential,
    PreconditionFailed,
    UnverifiedFormula,
    FeatureDisabled,
    NotInImage,
    ShapeMismatch,
    RelationIncompatible,
    SyntaxError,
    UnknownGenerator,
    SchemaError,
    GateFailure,
    TheoremViolation,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when two formulations of the same statement disagree. Always fatal.
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string& what) : Error(ErrorKind::TheoremViolation, what) {}
};

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond)
        throw Error(kind, what);
}

}  // namespace smashcalc
