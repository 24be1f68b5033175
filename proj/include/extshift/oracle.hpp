#pragma once

#include <vector>

#include "extshift/extended_spectrum.hpp"

namespace extshift {

// Orthonormal (Frobenius) basis of { X : S X = lambda X S } together with the
// full singular-value list of the vectorized map, kept for audit.
struct NullspaceBasis {
  Complex lambda;
  std::vector<Matrix> matrices;
  Eigen::VectorXd singular_values;
  double threshold = 0.0;
};

// The N^2 x N^2 matrix of X -> S X - lambda X S under column stacking:
// (I (x) S) - lambda (S^T (x) I).
Matrix intertwining_operator(const Matrix& s, Complex lambda);

// Singular vectors of the intertwining operator with singular value at most
// tol * sigma_max. Throws Error(DimensionOverflow) when N exceeds max_dimension
// and Error(RankAmbiguous) when a singular value falls inside the ambiguity
// band around the cutoff.
NullspaceBasis sylvester_nullspace(const Matrix& s, Complex lambda, double tol = 1e-9,
                                   Eigen::Index max_dimension = 32, double ambiguity = 100.0);

struct SubspaceReport {
  int dim_closed_form = 0;
  int dim_oracle = 0;
  double max_principal_angle = 0.0;
  bool match = false;
};

// Compares the span of the closed-form generators with the oracle nullspace in
// vectorized Frobenius geometry. Match iff dimensions agree and the largest
// principal angle is at most angle_tol.
SubspaceReport subspace_match(const EigenvectorFamily& closed, const NullspaceBasis& oracle,
                              double angle_tol = 1e-7, double rank_tol = 1e-10, double ambiguity = 100.0);

// True iff |alpha_i - lambda alpha_j| <= tol for some i, j, i.e. the spectra of
// S_B and lambda S_B intersect.
bool verify_inclusion(const BlaschkeProduct& b, Complex lambda, double tol = 1e-10);

}  // namespace extshift
