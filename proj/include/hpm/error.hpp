#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpm {

enum class ErrorKind {
  InvalidOrder,
  InvalidArgument,
  ZeroPolynomial,
  InsufficientSeries,
  DimensionTooLarge,
  NoSignChange,
  PrecisionExhausted,
  InsufficientData,
  SingularSystem,
  PoleEncountered,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InsufficientSeries: return "InsufficientSeries";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::PoleEncountered: return "PoleEncountered";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is stable and machine
/// readable; the message carries context such as the failing dimension.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hpm
