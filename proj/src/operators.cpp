#include "extshift/operators.hpp"

#include "extshift/errors.hpp"

namespace extshift {

ShiftMatrix backward_shift_matrix(const ModelSpaceBasis& basis) {
  const Eigen::Index n = basis.dimension();
  ShiftMatrix s{Matrix::Zero(n, n), BasisKind::Primal, OperatorKind::Backward};
  for (std::size_t i = 0; i < basis.product().zero_count(); ++i) {
    const Eigen::Index off = basis.offset(i);
    const Complex diag = std::conj(basis.alpha(i));
    for (int l = 0; l < basis.multiplicity(i); ++l) {
      s.entries(off + l, off + l) = diag;
      if (l > 0) s.entries(off + l - 1, off + l) = static_cast<double>(l);
    }
  }
  return s;
}

ShiftMatrix shift_matrix_dual(const ModelSpaceBasis& basis) {
  const Eigen::Index n = basis.dimension();
  ShiftMatrix s{Matrix::Zero(n, n), BasisKind::Dual, OperatorKind::Forward};
  for (std::size_t i = 0; i < basis.product().zero_count(); ++i) {
    const Eigen::Index off = basis.offset(i);
    const int p = basis.multiplicity(i);
    for (int l = 0; l < p; ++l) {
      s.entries(off + l, off + l) = basis.alpha(i);
      if (l + 1 < p) s.entries(off + l + 1, off + l) = static_cast<double>(l + 1);
    }
  }
  return s;
}

ShiftMatrix shift_matrix_primal(const ModelSpace& space) {
  const Matrix dual = shift_matrix_dual(space.basis()).entries;
  return {space.dual_to_primal() * dual * space.gram().entries, BasisKind::Primal, OperatorKind::Forward};
}

ShiftMatrix backward_shift_dual(const ModelSpace& space) {
  const Matrix primal = backward_shift_matrix(space.basis()).entries;
  return {space.gram().entries * primal * space.dual_to_primal(), BasisKind::Dual, OperatorKind::Backward};
}

ShiftMatrix shift_matrix(const ModelSpace& space, BasisKind basis, OperatorKind op) {
  if (op == OperatorKind::Forward) {
    return basis == BasisKind::Dual ? shift_matrix_dual(space.basis()) : shift_matrix_primal(space);
  }
  return basis == BasisKind::Primal ? backward_shift_matrix(space.basis()) : backward_shift_dual(space);
}

std::vector<int> jordan_kernel_dims(const ModelSpaceBasis& basis, std::size_t zero_index, double rel_tol,
                                    double ambiguity) {
  const Eigen::Index n = basis.dimension();
  const Matrix a =
      shift_matrix_dual(basis).entries - basis.alpha(zero_index) * Matrix::Identity(n, n);
  const int p = basis.multiplicity(zero_index);

  Eigen::JacobiSVD<Matrix> first(a);
  const double threshold = rel_tol * first.singularValues()(0);

  std::vector<int> nullities;
  Matrix current = a;
  for (int k = 1; k <= p + 1; ++k) {
    if (current.rows() == 0) {
      nullities.push_back(0);
      continue;
    }
    Eigen::JacobiSVD<Matrix> svd(current, Eigen::ComputeFullV);
    const Eigen::Index rank = count_above(svd.singularValues(), threshold, ambiguity);
    nullities.push_back(static_cast<int>(current.cols() - rank));
    const Matrix complement = svd.matrixV().leftCols(rank);
    current = complement.adjoint() * current * complement;
  }

  std::vector<int> dims;
  int total = 0;
  for (int nu : nullities) {
    total += nu;
    dims.push_back(total);
  }
  return dims;
}

}  // namespace extshift
