#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "extshift/linalg.hpp"

namespace extshift {

// One factor b_alpha^multiplicity of a finite Blaschke product, where
// b_alpha(z) = (alpha - z) / (1 - conj(alpha) z).
struct Zero {
  Complex alpha;
  int multiplicity = 1;
};

// Finite Blaschke product with pairwise distinct zeros strictly inside the
// unit disk. Immutable once validated.
class BlaschkeProduct {
 public:
  // Checks, in order: non-empty, positive multiplicities, finite zeros inside
  // the open disk, pairwise separation greater than merge_tolerance.
  static BlaschkeProduct validate(std::span<const Zero> zeros, double merge_tolerance = 1e-12);

  const std::vector<Zero>& zeros() const { return zeros_; }
  std::size_t zero_count() const { return zeros_.size(); }
  const Zero& zero(std::size_t i) const { return zeros_.at(i); }

  // Dimension of the model space, the sum of multiplicities.
  int degree() const { return degree_; }

  // True iff some zero is exactly 0.
  bool has_origin_zero() const { return origin_.has_value(); }
  std::optional<std::size_t> origin_index() const { return origin_; }

  // B(z). Throws Error(PoleHit) when some 1 - conj(alpha_i) z vanishes
  // numerically.
  Complex operator()(Complex z) const;

 private:
  BlaschkeProduct(std::vector<Zero> zeros, int degree, std::optional<std::size_t> origin);

  std::vector<Zero> zeros_;
  int degree_ = 0;
  std::optional<std::size_t> origin_;
};

Complex evaluate(const BlaschkeProduct& b, Complex z);
int degree(const BlaschkeProduct& b);

// Denominators 1 - conj(alpha) z below this magnitude are treated as poles.
inline constexpr double kPoleFloor = 1e-14;

}  // namespace extshift
