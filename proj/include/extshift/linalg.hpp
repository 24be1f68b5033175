#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace extshift {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// n! as a double; exact for n <= 22.
double factorial(int n);

// z^k by repeated multiplication, with z^0 == 1 for every z including 0.
Complex ipow(Complex z, int k);

// Number of singular values (sorted descending) strictly above
// rel_tol * max(singular_values). Throws Error(RankAmbiguous) when any singular
// value lies within a factor `ambiguity` of that threshold. An all-zero
// spectrum has rank 0.
Eigen::Index numerical_rank(const Eigen::VectorXd& singular_values, double rel_tol, double ambiguity);

// Same rule against an explicit absolute threshold.
Eigen::Index count_above(const Eigen::VectorXd& singular_values, double threshold, double ambiguity);

// Orthonormal basis of the column span of `columns`, rank decided by
// numerical_rank.
Matrix orthonormal_span(const Matrix& columns, double rel_tol, double ambiguity);

// Largest principal angle (radians) between the spans of two matrices with
// orthonormal columns. Computed from sines so that tiny angles keep full
// relative accuracy. Returns pi/2 when exactly one span is trivial.
double max_principal_angle(const Matrix& q_a, const Matrix& q_b);

// Column-stacking vectorization and its inverse.
Vector vectorize(const Matrix& x);
Matrix unvectorize(const Vector& v, Eigen::Index rows);

// Frobenius norm of S X - lambda X S.
double intertwining_residual(const Matrix& s, const Matrix& x, Complex lambda);

}  // namespace extshift
