#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "extshift/blaschke.hpp"

namespace extshift {

struct RandomOptions {
  int max_degree = 8;
  bool simple_only = false;  // every multiplicity 1, degree = number of zeros
  bool allow_plant = true;   // with probability 1/2, force an exact ratio coincidence
};

struct RandomInstance {
  std::uint64_t seed = 0;
  std::vector<Zero> zeros;
  std::optional<Complex> planted_ratio;  // lambda with alpha_c = lambda alpha_d for a second pair
};

// Reproducible Blaschke data: moduli in [0.1, 0.85], pairwise separation at
// least 0.05, degree at most max_degree, and an intertwining gap of at least
// kMinIntertwiningGap at every ratio and at the probe lambda = -1. Planted instances have at least three
// zeros and a ratio alpha_a / alpha_b shared by a second pair.
RandomInstance random_instance(std::uint64_t seed, const RandomOptions& options);
RandomInstance random_instance(std::uint64_t seed, int max_degree);

inline constexpr double kMinModulus = 0.1;
inline constexpr double kMaxModulus = 0.85;
inline constexpr double kMinSeparation = 0.05;
inline constexpr double kMinIntertwiningGap = 1e-6;

// min over pairs (m, n) that do not witness lambda of
//   (|alpha_m - lambda alpha_n| / (1 + |lambda|))^(p_m + p_n - 1) / ((p_m - 1)! (p_n - 1)!),
// a proxy for the smallest nonzero singular value of X -> S X - lambda X S
// relative to its norm. +inf when every pair is a witness.
double intertwining_gap(const BlaschkeProduct& b, Complex lambda, double ratio_tol = 1e-12);

}  // namespace extshift
