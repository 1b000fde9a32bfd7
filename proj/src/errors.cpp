#include "augvar/errors.hpp"

namespace augvar {

std::string_view error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NegativeExponentAtZero: return "NegativeExponentAtZero";
    case ErrorKind::NotInvertibleAtPoint: return "NotInvertibleAtPoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTwoDimensionalInput: return "NotTwoDimensionalInput";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::SignLengthMismatch: return "SignLengthMismatch";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DegenerateFan: return "DegenerateFan";
    case ErrorKind::NotANormalizedTriple: return "NotANormalizedTriple";
    case ErrorKind::NoRootAvailable: return "NoRootAvailable";
    case ErrorKind::DoubleRoot: return "DoubleRoot";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

}  // namespace augvar
