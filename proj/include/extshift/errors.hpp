#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extshift {

enum class ErrorKind {
  InvalidInput,
  EmptyProduct,
  ZeroOutsideDisk,
  DuplicateZero,
  NonpositiveMultiplicity,
  PoleHit,
  IllConditioned,
  RankAmbiguous,
  LambdaNotInSpectrum,
  DimensionOverflow,
};

std::string_view to_string(ErrorKind kind);

// Refusals caused by floating-point limits rather than bad input.
bool is_numerical_refusal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace extshift
