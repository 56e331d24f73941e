#pragma once

#include <stdexcept>
#include <string>

namespace wpnlab {

enum class ErrorCode {
  MalformedHeader,
  OutOfRangeByte,
  TrailingBits,
  BadLength,
  TooLarge,
  InvalidArgument,
  NoFiniteBasis,
  NotWitnessing,
  Unsupported,
  ConfigMismatch,
  Io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::OutOfRangeByte: return "OutOfRangeByte";
    case ErrorCode::TrailingBits: return "TrailingBits";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoFiniteBasis: return "NoFiniteBasis";
    case ErrorCode::NotWitnessing: return "NotWitnessing";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wpnlab
