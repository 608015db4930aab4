#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmtilt {

enum class ErrorKind {
  ParseError,
  NotHomogeneous,
  InvalidInput,
  DegreeNotPositive,
  NoNzdFound,
  InternalCheckFailed,
  PeriodNotFound,
  UnsupportedFactorization,
  SmallCharUnsupported,
  CartanSingular,
  NegativeAInvariant,
  BadLambda,
  WindowUnstable,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Input errors map to CLI exit code 2.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::NotHomogeneous ||
           kind_ == ErrorKind::InvalidInput;
  }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegreeNotPositive: return "DegreeNotPositive";
    case ErrorKind::NoNzdFound: return "NoNzdFound";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::UnsupportedFactorization: return "UnsupportedFactorization";
    case ErrorKind::SmallCharUnsupported: return "SmallCharUnsupported";
    case ErrorKind::CartanSingular: return "CartanSingular";
    case ErrorKind::NegativeAInvariant: return "NegativeAInvariant";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::WindowUnstable: return "WindowUnstable";
  }
  return "Unknown";
}

}  // namespace cmtilt
