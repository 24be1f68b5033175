#include "extshift/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "extshift/errors.hpp"

namespace extshift {

double factorial(int n) {
  double result = 1.0;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  for (int i = 0; i < k; ++i) result *= z;
  return result;
}

Eigen::Index count_above(const Eigen::VectorXd& singular_values, double threshold, double ambiguity) {
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    const double s = singular_values(i);
    if (threshold > 0.0 && s > threshold / ambiguity && s <= threshold * ambiguity) {
      std::ostringstream msg;
      msg << "singular value " << s << " lies within a factor " << ambiguity << " of the cutoff "
          << threshold;
      throw Error(ErrorKind::RankAmbiguous, msg.str());
    }
    if (s > threshold) ++rank;
  }
  return rank;
}

Eigen::Index numerical_rank(const Eigen::VectorXd& singular_values, double rel_tol, double ambiguity) {
  if (singular_values.size() == 0) return 0;
  const double largest = singular_values.maxCoeff();
  if (largest == 0.0) return 0;
  return count_above(singular_values, rel_tol * largest, ambiguity);
}

Matrix orthonormal_span(const Matrix& columns, double rel_tol, double ambiguity) {
  if (columns.cols() == 0) return Matrix(columns.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const Eigen::Index rank = numerical_rank(svd.singularValues(), rel_tol, ambiguity);
  return svd.matrixU().leftCols(rank);
}

namespace {

// Largest sine of the angles between span(q_b) and span(q_a).
double largest_sine(const Matrix& q_a, const Matrix& q_b) {
  const Matrix residual = q_b - q_a * (q_a.adjoint() * q_b);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

}  // namespace

double max_principal_angle(const Matrix& q_a, const Matrix& q_b) {
  if (q_a.cols() == 0 && q_b.cols() == 0) return 0.0;
  if (q_a.cols() == 0 || q_b.cols() == 0) return std::numbers::pi / 2;
  const double s = std::max(largest_sine(q_a, q_b), largest_sine(q_b, q_a));
  return std::asin(std::min(1.0, s));
}

Vector vectorize(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

Matrix unvectorize(const Vector& v, Eigen::Index rows) {
  return Eigen::Map<const Matrix>(v.data(), rows, v.size() / rows);
}

double intertwining_residual(const Matrix& s, const Matrix& x, Complex lambda) {
  return (s * x - lambda * (x * s)).norm();
}

}  // namespace extshift
