#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extshift/kernels.hpp"

namespace extshift {

// Ordered pair (m, n) of 0-based zero indices with alpha_m = lambda alpha_n.
struct WitnessPair {
  std::size_t m = 0;
  std::size_t n = 0;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// One point of the extended spectrum, or the whole-plane marker.
struct ExtendedEigenvalue {
  Complex value;
  std::vector<WitnessPair> witnesses;
  bool whole_plane = false;
};

// Deduplicated ratios alpha_m / alpha_n with every witness pair, sorted by
// (real, imaginary) part. When B has a zero at the origin the result is the
// single whole-plane marker. Two ratios are grouped iff
// |r1 - r2| <= ratio_tol * max(1, |r1|).
std::vector<ExtendedEigenvalue> extended_spectrum(const BlaschkeProduct& b, double ratio_tol = 1e-12);

// All pairs (m, n) with alpha_m = lambda alpha_n under the ratio tolerance.
// Pairs with alpha_n = 0 qualify iff alpha_m = 0, for every lambda.
std::vector<WitnessPair> witnesses_for(const BlaschkeProduct& b, Complex lambda, double ratio_tol = 1e-12);

// Dual-basis matrix (equivalently: coefficient matrix of e*_a (x) e_b) of
//   sum_{k=0}^{l} sum_{r=0}^{k} c_{k-r} rho^r (l+r-k)! (p_m-r-1)! / ((l-k)! (p_m-1)!)
//     e*_{m, p_m-r-1} (x) e_{n, l-k}
// where (a (x) b)(x) = <x, b> a. `coefficients` holds c_0 .. c_l.
// Requires l < min(p_m, p_n), or l < p_n when rho = 0.
Matrix closed_form_generator(const ModelSpaceBasis& basis, WitnessPair pair, int level,
                             std::span<const Complex> coefficients, Complex rho);

// The ratio used in the coefficient formula for a witness pair: alpha_m / alpha_n,
// exactly 1 on the diagonal, and lambda itself when both zeros sit at the origin.
Complex witness_ratio(const ModelSpaceBasis& basis, WitnessPair pair, Complex lambda);

// Levels l available for a witness pair: min(p_m, p_n), or p_n when rho = 0.
int witness_levels(const ModelSpaceBasis& basis, WitnessPair pair, Complex rho);

struct Generator {
  Matrix op;
  WitnessPair witness;
  int level = 0;
  std::vector<Complex> coefficients;  // c_0 .. c_level
  bool origin_witness = false;        // e*_{0,p_0-1} (x) e_{0,0}, valid for every lambda
};

struct EigenvectorFamily {
  Complex lambda;
  std::vector<Generator> generators;
};

// One generator per (witness, level) with c_0 = 1 and c_1 = ... = c_l = 0.
// Throws Error(LambdaNotInSpectrum) when no witness pair exists.
EigenvectorFamily eigenvector_family(const ModelSpaceBasis& basis, Complex lambda, double ratio_tol = 1e-12);

// Sum over witnesses of witness_levels; the dimension the family must span.
int expected_dimension(const ModelSpaceBasis& basis, Complex lambda, double ratio_tol = 1e-12);

// Generators as columns of an N^2 x count matrix (column-stacked).
Matrix stacked_generators(const EigenvectorFamily& family);

// Numerical rank of the stacked generators. Throws Error(RankAmbiguous).
int family_span_dimension(const EigenvectorFamily& family, double rel_tol = 1e-10, double ambiguity = 100.0);

}  // namespace extshift
