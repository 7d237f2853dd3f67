#include "udca/errors.hpp"

namespace udca {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::SizeExceeded: return "SizeExceeded";
        case ErrorKind::SpanFailure: return "SpanFailure";
        case ErrorKind::SingularBasis: return "SingularBasis";
        case ErrorKind::NotInPolytope: return "NotInPolytope";
        case ErrorKind::ZeroDirection: return "ZeroDirection";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::NotUnimodularTransform: return "NotUnimodularTransform";
        case ErrorKind::NotSubmodular: return "NotSubmodular";
        case ErrorKind::NotSupermodular: return "NotSupermodular";
        case ErrorKind::NotParamodular: return "NotParamodular";
        case ErrorKind::NotInSum: return "NotInSum";
        case ErrorKind::IntegralityFailure: return "IntegralityFailure";
        case ErrorKind::ClassViolation: return "ClassViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    }
    return "UnknownError";
}

}  // namespace udca
