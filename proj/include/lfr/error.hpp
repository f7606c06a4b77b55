#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfr {

enum class ErrorCode {
  NotAPoset,
  NotALattice,
  NoBounds,
  NotDistributive,
  NotInvolutive,
  NotAntitone,
  UnknownCatalogId,
  UnknownElement,
  UnknownPoint,
  InvalidInput,
  MixedContext,
  EnumerationTooLarge,
  WordTooLong,
  UnsupportedKind,
  UnknownKind,
  ParseError,
  SchemaError,
  UnknownExample,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotAntitone: return "NotAntitone";
    case ErrorCode::UnknownCatalogId: return "UnknownCatalogId";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::MixedContext: return "MixedContext";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::WordTooLong: return "WordTooLong";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lfr
