#ifndef HYPSURF_ERRORS_HPP
#define HYPSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypsurf {

enum class ErrorKind {
  InvalidMatrix,
  IdentityHasAllPoints,
  RelatorViolated,
  RoundingUnsafe,
  BadGenusRange,
  BadWord,
  RelatorImageNontrivial,
  ConstructionInvalid,
  AngleOutOfRange,
  NotIntegerAngle,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::IdentityHasAllPoints: return "IdentityHasAllPoints";
    case ErrorKind::RelatorViolated: return "RelatorViolated";
    case ErrorKind::RoundingUnsafe: return "RoundingUnsafe";
    case ErrorKind::BadGenusRange: return "BadGenusRange";
    case ErrorKind::BadWord: return "BadWord";
    case ErrorKind::RelatorImageNontrivial: return "RelatorImageNontrivial";
    case ErrorKind::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorKind::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorKind::NotIntegerAngle: return "NotIntegerAngle";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypsurf

#endif  // HYPSURF_ERRORS_HPP
