#pragma once

#include <stdexcept>
#include <string>

namespace pxp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid inputs or violated preconditions (CLI exit code 2).
struct InvalidArgument : Error {
    using Error::Error;
};

struct ContextMismatch : InvalidArgument {
    ContextMismatch() : InvalidArgument("operands belong to different prime fields") {}
};

struct DivisionByZero : InvalidArgument {
    DivisionByZero() : InvalidArgument("division by zero in prime field") {}
};

struct NotAUnit : InvalidArgument {
    NotAUnit() : InvalidArgument("zero has no fourth-power class") {}
};

struct InvalidParameter : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct SingularMatrix : InvalidArgument {
    SingularMatrix() : InvalidArgument("matrix is singular") {}
};

struct InvalidLeftMatrix : InvalidArgument {
    InvalidLeftMatrix() : InvalidArgument("left-action matrix must have determinant +1 or -1") {}
};

struct UnsupportedDegree : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct UnsupportedPrime : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct HypothesisViolation : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

/// Structurally valid input rejected on mathematical grounds (CLI exit code 3).
struct DomainRejection : Error {
    using Error::Error;
};

struct NonRealizable : DomainRejection {
    using DomainRejection::DomainRejection;
};

struct NotFree : DomainRejection {
    using DomainRejection::DomainRejection;
};

/// Requested computation exceeds the configured budget (CLI exit code 4).
struct ResourceLimit : Error {
    using Error::Error;
};

} // namespace pxp
