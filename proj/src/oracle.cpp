#include "extshift/oracle.hpp"

#include <cmath>
#include <numbers>

#include "extshift/errors.hpp"

namespace extshift {

Matrix intertwining_operator(const Matrix& s, Complex lambda) {
  const Eigen::Index n = s.rows();
  Matrix k = Matrix::Zero(n * n, n * n);
  // vec index of X(r, c) is c * n + r
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const Eigen::Index row = c * n + r;
      for (Eigen::Index t = 0; t < n; ++t) {
        k(row, c * n + t) += s(r, t);             // (S X)(r, c) = sum_t S(r, t) X(t, c)
        k(row, t * n + r) -= lambda * s(t, c);    // (X S)(r, c) = sum_t X(r, t) S(t, c)
      }
    }
  }
  return k;
}

NullspaceBasis sylvester_nullspace(const Matrix& s, Complex lambda, double tol, Eigen::Index max_dimension,
                                   double ambiguity) {
  if (s.rows() != s.cols()) {
    throw Error(ErrorKind::InvalidInput, "intertwining oracle needs a square matrix");
  }
  const Eigen::Index n = s.rows();
  if (n > max_dimension) {
    throw Error(ErrorKind::DimensionOverflow, "N = " + std::to_string(n) + " exceeds the oracle cap " +
                                                  std::to_string(max_dimension));
  }
  const Matrix k = intertwining_operator(s, lambda);
  // BDCSVD in Eigen 3.4.0 returns wrong complex null vectors for some inputs.
  Eigen::JacobiSVD<Matrix> svd(k, Eigen::ComputeFullV);

  NullspaceBasis basis;
  basis.lambda = lambda;
  basis.singular_values = svd.singularValues();
  const double largest = basis.singular_values.size() ? basis.singular_values.maxCoeff() : 0.0;
  basis.threshold = tol * largest;
  const Eigen::Index rank = count_above(basis.singular_values, basis.threshold, ambiguity);
  for (Eigen::Index j = rank; j < n * n; ++j) {
    basis.matrices.push_back(unvectorize(svd.matrixV().col(j), n));
  }
  return basis;
}

SubspaceReport subspace_match(const EigenvectorFamily& closed, const NullspaceBasis& oracle, double angle_tol,
                              double rank_tol, double ambiguity) {
  SubspaceReport report;
  const Matrix closed_q = closed.generators.empty()
                              ? Matrix(0, 0)
                              : orthonormal_span(stacked_generators(closed), rank_tol, ambiguity);
  report.dim_closed_form = static_cast<int>(closed_q.cols());
  report.dim_oracle = static_cast<int>(oracle.matrices.size());

  Matrix oracle_q;
  if (!oracle.matrices.empty()) {
    oracle_q.resize(oracle.matrices.front().size(), report.dim_oracle);
    for (int j = 0; j < report.dim_oracle; ++j) oracle_q.col(j) = vectorize(oracle.matrices[j]);
  }
  if (closed_q.cols() == 0 && oracle_q.cols() == 0) {
    report.max_principal_angle = 0.0;
  } else if (closed_q.cols() == 0 || oracle_q.cols() == 0) {
    report.max_principal_angle = std::numbers::pi / 2;
  } else {
    report.max_principal_angle = max_principal_angle(closed_q, oracle_q);
  }
  report.match = report.dim_closed_form == report.dim_oracle && report.max_principal_angle <= angle_tol;
  return report;
}

bool verify_inclusion(const BlaschkeProduct& b, Complex lambda, double tol) {
  for (const Zero& i : b.zeros()) {
    for (const Zero& j : b.zeros()) {
      if (std::abs(i.alpha - lambda * j.alpha) <= tol) return true;
    }
  }
  return false;
}

}  // namespace extshift
