#include "charsum/error.hpp"

namespace charsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotADivisorInt: return "NotADivisorInt";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::MixedOrders: return "MixedOrders";
    case ErrorKind::NonIntegerSum: return "NonIntegerSum";
    case ErrorKind::NonBinaryResult: return "NonBinaryResult";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace charsum
