#include "extshift/errors.hpp"

namespace extshift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
      return "InvalidInput";
    case ErrorKind::EmptyProduct:
      return "EmptyProduct";
    case ErrorKind::ZeroOutsideDisk:
      return "ZeroOutsideDisk";
    case ErrorKind::DuplicateZero:
      return "DuplicateZero";
    case ErrorKind::NonpositiveMultiplicity:
      return "NonpositiveMultiplicity";
    case ErrorKind::PoleHit:
      return "PoleHit";
    case ErrorKind::IllConditioned:
      return "IllConditioned";
    case ErrorKind::RankAmbiguous:
      return "RankAmbiguous";
    case ErrorKind::LambdaNotInSpectrum:
      return "LambdaNotInSpectrum";
    case ErrorKind::DimensionOverflow:
      return "DimensionOverflow";
  }
  return "Unknown";
}

bool is_numerical_refusal(ErrorKind kind) {
  return kind == ErrorKind::IllConditioned || kind == ErrorKind::RankAmbiguous ||
         kind == ErrorKind::DimensionOverflow;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace extshift
