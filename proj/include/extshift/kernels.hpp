#pragma once

#include <cstddef>
#include <vector>

#include "extshift/blaschke.hpp"
#include "extshift/linalg.hpp"
#include "extshift/tolerances.hpp"

namespace extshift {

// Position (i, l) of the Cauchy kernel e_{i,l}(z) = l! z^l / (1 - conj(alpha_i) z)^{l+1}.
// zero_index is 0-based here; reports print it 1-based.
struct BasisIndex {
  std::size_t zero_index = 0;
  int order = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Lexicographically ordered kernel basis of K_B^2. Block i occupies the
// contiguous positions offset(i) .. offset(i) + p_i - 1.
class ModelSpaceBasis {
 public:
  explicit ModelSpaceBasis(BlaschkeProduct product);

  const BlaschkeProduct& product() const { return product_; }
  const std::vector<BasisIndex>& indices() const { return indices_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(indices_.size()); }

  Eigen::Index offset(std::size_t zero_index) const { return offsets_.at(zero_index); }
  Eigen::Index position(BasisIndex idx) const;
  int multiplicity(std::size_t zero_index) const { return product_.zero(zero_index).multiplicity; }
  Complex alpha(std::size_t zero_index) const { return product_.zero(zero_index).alpha; }

 private:
  BlaschkeProduct product_;
  std::vector<BasisIndex> indices_;
  std::vector<Eigen::Index> offsets_;
};

Complex evaluate_kernel(const BlaschkeProduct& b, BasisIndex idx, Complex z);

// Reproducing kernel of K_B^2 at lambda:
// (1 - conj(B(lambda)) B(z)) / (1 - conj(lambda) z).
Complex model_kernel(const BlaschkeProduct& b, Complex lambda, Complex z);

// entries(row=(i,l), col=(j,m)) = <e_{j,m}, e_{i,l}> = e_{j,m}^{(l)}(alpha_i).
struct GramMatrix {
  Matrix entries;
  double condition_estimate = 0.0;
};

// Closed-form Gram matrix. Throws Error(IllConditioned) when it is not
// positive definite or its condition number exceeds condition_cap.
GramMatrix gram(const ModelSpaceBasis& basis, double condition_cap = 1e12);

// Dual kernels e*_r = sum_k coeffs(r, k) e_k with <e*_r, e_s> = delta_rs.
struct DualBasis {
  Matrix coeffs;
  double tolerance = 0.0;      // accepted biorthogonality deviation
  double max_deviation = 0.0;  // measured biorthogonality deviation
};

// Solves against the Gram matrix with a pivoted LU. Throws
// Error(IllConditioned) when the measured deviation exceeds
// 1e-9 * condition_estimate.
DualBasis dual_basis(const GramMatrix& gram);

// Pairing matrix P(r, s) = <e*_r, e_s>, computed through the Gram matrix.
Matrix biorthogonality_pairing(const GramMatrix& gram, const DualBasis& dual);

enum class BasisKind { Primal, Dual };

// Basis, Gram matrix and dual basis of one model space, built together.
class ModelSpace {
 public:
  static ModelSpace build(const BlaschkeProduct& b, const Tolerances& tol = {});

  const ModelSpaceBasis& basis() const { return basis_; }
  const BlaschkeProduct& product() const { return basis_.product(); }
  const GramMatrix& gram() const { return gram_; }
  const DualBasis& dual() const { return dual_; }
  Eigen::Index dimension() const { return basis_.dimension(); }

  // Coordinates change: primal = dual_to_primal() * dual.
  Matrix dual_to_primal() const { return dual_.coeffs.transpose(); }

 private:
  ModelSpace(ModelSpaceBasis basis, GramMatrix gram, DualBasis dual);

  ModelSpaceBasis basis_;
  GramMatrix gram_;
  DualBasis dual_;
};

// Element of K_B^2 given by coordinates in the primal or dual kernel basis.
struct FunctionVector {
  BasisKind basis = BasisKind::Primal;
  Vector coeffs;
};

Vector primal_coordinates(const ModelSpace& space, const FunctionVector& f);

// f(z) through the closed-form kernel evaluators.
Complex evaluate_function(const ModelSpace& space, const FunctionVector& f, Complex z);

// Same for primal coordinates only; no Gram matrix needed.
Complex evaluate_primal(const ModelSpaceBasis& basis, const Vector& coeffs, Complex z);

// <f, g> in H^2, through the Gram matrix.
Complex inner_product(const ModelSpace& space, const FunctionVector& f, const FunctionVector& g);

// k_lambda^B as a dual-coordinate vector: its dual coordinates are
// conj(e_r(lambda)).
FunctionVector reproducing_kernel(const ModelSpaceBasis& basis, Complex lambda);

}  // namespace extshift
