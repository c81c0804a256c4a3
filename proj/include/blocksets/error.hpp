#ifndef BLOCKSETS_ERROR_HPP
#define BLOCKSETS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace blocksets {

enum class ErrorKind {
  InvalidSymbol,
  CapacityExceeded,
  ProfileMismatch,
  EmptyTemplate,
  InvalidPlacement,
  ArityMismatch,
  AmbientTooSmall,
  SubstitutionMismatch,
  IndexOutOfRange,
  NotInFamilyA,
  DomainError,
  NotHomogeneous,
  ExtractionContradiction,
  EncodingMismatch,
  SupportOverlap,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::EmptyTemplate: return "EmptyTemplate";
    case ErrorKind::InvalidPlacement: return "InvalidPlacement";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorKind::SubstitutionMismatch: return "SubstitutionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInFamilyA: return "NotInFamilyA";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ExtractionContradiction: return "ExtractionContradiction";
    case ErrorKind::EncodingMismatch: return "EncodingMismatch";
    case ErrorKind::SupportOverlap: return "SupportOverlap";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blocksets

#endif  // BLOCKSETS_ERROR_HPP
