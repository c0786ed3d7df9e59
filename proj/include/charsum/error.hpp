#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charsum {

enum class ErrorKind {
  NotPrime,
  SizeExceeded,
  OutOfRange,
  DivisionByZeroPoly,
  ZeroElement,
  NotADivisor,
  NotADivisorInt,
  NotCoprime,
  NotIrreducible,
  NotSquareFree,
  NotNormal,
  MixedOrders,
  NonIntegerSum,
  NonBinaryResult,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail);

}  // namespace charsum

#define CHARSUM_ASSERT(cond, msg)                                                   \
  do {                                                                              \
    if (!(cond))                                                                    \
      ::charsum::raise(::charsum::ErrorKind::InternalInconsistency,                 \
                       std::string(msg) + " [" #cond "] at " __FILE__ ":" +         \
                           std::to_string(__LINE__));                               \
  } while (false)
