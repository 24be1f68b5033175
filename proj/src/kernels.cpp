#include "extshift/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extshift/errors.hpp"

namespace extshift {

ModelSpaceBasis::ModelSpaceBasis(BlaschkeProduct product) : product_(std::move(product)) {
  Eigen::Index next = 0;
  for (std::size_t i = 0; i < product_.zero_count(); ++i) {
    offsets_.push_back(next);
    for (int l = 0; l < product_.zero(i).multiplicity; ++l) {
      indices_.push_back({i, l});
      ++next;
    }
  }
}

Eigen::Index ModelSpaceBasis::position(BasisIndex idx) const {
  return offsets_.at(idx.zero_index) + idx.order;
}

Complex evaluate_kernel(const BlaschkeProduct& b, BasisIndex idx, Complex z) {
  const Complex alpha = b.zero(idx.zero_index).alpha;
  const Complex den = 1.0 - std::conj(alpha) * z;
  if (std::abs(den) < kPoleFloor) {
    throw Error(ErrorKind::PoleHit, "kernel evaluated at its pole 1/conj(alpha)");
  }
  return factorial(idx.order) * ipow(z, idx.order) / ipow(den, idx.order + 1);
}

Complex model_kernel(const BlaschkeProduct& b, Complex lambda, Complex z) {
  const Complex den = 1.0 - std::conj(lambda) * z;
  if (std::abs(den) < kPoleFloor) {
    throw Error(ErrorKind::PoleHit, "model kernel denominator vanishes");
  }
  return (1.0 - std::conj(b(lambda)) * b(z)) / den;
}

namespace {

// l-th derivative of e_{j,m} at z, expanded with the product rule:
// sum_s l! m! (m+l-s)! / (s! (l-s)! (m-s)!) z^{m-s} beta^{l-s} / (1 - beta z)^{m+l-s+1}
// with beta = conj(alpha_j).
Complex kernel_derivative(Complex alpha_j, int m, int l, Complex z) {
  const Complex beta = std::conj(alpha_j);
  const Complex den = 1.0 - beta * z;
  Complex sum{0.0, 0.0};
  for (int s = 0; s <= std::min(l, m); ++s) {
    const double weight = factorial(l) * factorial(m) * factorial(m + l - s) /
                          (factorial(s) * factorial(l - s) * factorial(m - s));
    sum += weight * ipow(z, m - s) * ipow(beta, l - s) / ipow(den, m + l - s + 1);
  }
  return sum;
}

}  // namespace

GramMatrix gram(const ModelSpaceBasis& basis, double condition_cap) {
  const Eigen::Index n = basis.dimension();
  const auto& idx = basis.indices();
  GramMatrix g;
  g.entries.resize(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    const Complex alpha_i = basis.alpha(idx[row].zero_index);
    for (Eigen::Index col = 0; col < n; ++col) {
      g.entries(row, col) =
          kernel_derivative(basis.alpha(idx[col].zero_index), idx[col].order, idx[row].order, alpha_i);
    }
  }

  const double scale = g.entries.cwiseAbs().maxCoeff();
  const double asymmetry = (g.entries - g.entries.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "Gram matrix is not Hermitian (deviation " << asymmetry << " at scale " << scale << ")";
    throw Error(ErrorKind::IllConditioned, msg.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(g.entries, Eigen::EigenvaluesOnly);
  const double smallest = eig.eigenvalues().minCoeff();
  const double largest = eig.eigenvalues().maxCoeff();
  if (!(smallest > 0.0)) {
    throw Error(ErrorKind::IllConditioned, "Gram matrix is not numerically positive definite");
  }
  g.condition_estimate = largest / smallest;
  if (g.condition_estimate > condition_cap) {
    std::ostringstream msg;
    msg << "Gram condition estimate " << g.condition_estimate << " exceeds the cap " << condition_cap;
    throw Error(ErrorKind::IllConditioned, msg.str());
  }
  return g;
}

Matrix biorthogonality_pairing(const GramMatrix& gram, const DualBasis& dual) {
  // <e*_r, e_s> = sum_k C(r,k) <e_k, e_s> = sum_k C(r,k) G(s,k)
  return dual.coeffs * gram.entries.transpose();
}

DualBasis dual_basis(const GramMatrix& gram) {
  const Eigen::Index n = gram.entries.rows();
  DualBasis dual;
  // C G^T = I  <=>  G C^T = I
  const Matrix coeffs_t = gram.entries.partialPivLu().solve(Matrix::Identity(n, n));
  dual.coeffs = coeffs_t.transpose();
  dual.tolerance = 1e-9 * gram.condition_estimate;
  dual.max_deviation =
      (biorthogonality_pairing(gram, dual) - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(dual.max_deviation <= dual.tolerance)) {
    std::ostringstream msg;
    msg << "biorthogonality deviation " << dual.max_deviation << " exceeds " << dual.tolerance;
    throw Error(ErrorKind::IllConditioned, msg.str());
  }
  return dual;
}

ModelSpace::ModelSpace(ModelSpaceBasis basis, GramMatrix gram, DualBasis dual)
    : basis_(std::move(basis)), gram_(std::move(gram)), dual_(std::move(dual)) {}

ModelSpace ModelSpace::build(const BlaschkeProduct& b, const Tolerances& tol) {
  ModelSpaceBasis basis(b);
  GramMatrix g = extshift::gram(basis, tol.condition_cap);
  DualBasis d = extshift::dual_basis(g);
  return ModelSpace(std::move(basis), std::move(g), std::move(d));
}

Vector primal_coordinates(const ModelSpace& space, const FunctionVector& f) {
  if (f.coeffs.size() != space.dimension()) {
    throw Error(ErrorKind::InvalidInput, "coefficient vector length does not match the model space");
  }
  return f.basis == BasisKind::Primal ? f.coeffs : Vector(space.dual_to_primal() * f.coeffs);
}

Complex evaluate_primal(const ModelSpaceBasis& basis, const Vector& coeffs, Complex z) {
  Complex value{0.0, 0.0};
  for (Eigen::Index k = 0; k < basis.dimension(); ++k) {
    if (coeffs(k) != Complex{0.0, 0.0}) {
      value += coeffs(k) * evaluate_kernel(basis.product(), basis.indices()[k], z);
    }
  }
  return value;
}

Complex evaluate_function(const ModelSpace& space, const FunctionVector& f, Complex z) {
  return evaluate_primal(space.basis(), primal_coordinates(space, f), z);
}

Complex inner_product(const ModelSpace& space, const FunctionVector& f, const FunctionVector& g) {
  const Vector a = primal_coordinates(space, f);
  const Vector b = primal_coordinates(space, g);
  return b.dot(space.gram().entries * a);  // b^H G a
}

FunctionVector reproducing_kernel(const ModelSpaceBasis& basis, Complex lambda) {
  FunctionVector k{BasisKind::Dual, Vector(basis.dimension())};
  for (Eigen::Index r = 0; r < basis.dimension(); ++r) {
    k.coeffs(r) = std::conj(evaluate_kernel(basis.product(), basis.indices()[r], lambda));
  }
  return k;
}

}  // namespace extshift
