#pragma once

#include <stdexcept>
#include <string>

namespace udca {

/// Distinguishes "the property is false, here is a witness" (exit 1 at the
/// CLI) from "the input or configuration is unusable" (exit 2).
enum class ErrorKind {
    DimensionMismatch,
    EmptySet,
    EmptyInput,
    SizeExceeded,
    SpanFailure,
    SingularBasis,
    NotInPolytope,
    ZeroDirection,
    NotUnimodular,
    NotUnimodularTransform,
    NotSubmodular,
    NotSupermodular,
    NotParamodular,
    NotInSum,
    IntegralityFailure,
    ClassViolation,
    ParseError,
    FixtureMismatch,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
    if (!cond) raise(kind, message);
}

}  // namespace udca
