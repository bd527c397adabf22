#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holofield {

enum class ErrorKind {
  ReduciblePolynomial,
  BadInterval,
  DivisionByZero,
  FieldMismatch,
  DegreeLimitExceeded,
  BudgetExceeded,
  BadGluing,
  Disconnected,
  NonPolygon,
  Intransitive,
  DegeneratePeriods,
  NotSimple,
  NotCoprime,
  NotADivisor,
  NotInvariant,
  NoComplement,
  TraceFieldMismatch,
  NotBlockTriangular,
  Unsupported,
  InvalidInput,
  VerificationFailed,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. The kind selects the CLI exit code:
/// resource and degree limits map to 2, everything else to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_limit() const noexcept {
    return kind_ == ErrorKind::DegreeLimitExceeded || kind_ == ErrorKind::BudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& detail) {
  if (!condition) throw Error(kind, detail);
}

}  // namespace holofield
