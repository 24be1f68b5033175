#include "extshift/extended_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "extshift/errors.hpp"

namespace extshift {

namespace {

constexpr Complex kZero{0.0, 0.0};

bool ratios_coincide(Complex reference, Complex candidate, double ratio_tol) {
  return std::abs(candidate - reference) <= ratio_tol * std::max(1.0, std::abs(reference));
}

Complex ratio(const BlaschkeProduct& b, std::size_t m, std::size_t n) {
  return m == n ? Complex{1.0, 0.0} : b.zero(m).alpha / b.zero(n).alpha;
}

}  // namespace

std::vector<ExtendedEigenvalue> extended_spectrum(const BlaschkeProduct& b, double ratio_tol) {
  if (b.has_origin_zero()) {
    return {ExtendedEigenvalue{kZero, {}, true}};
  }
  std::vector<ExtendedEigenvalue> groups;
  const std::size_t count = b.zero_count();
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t n = 0; n < count; ++n) {
      const Complex r = ratio(b, m, n);
      auto it = std::find_if(groups.begin(), groups.end(), [&](const ExtendedEigenvalue& g) {
        return ratios_coincide(g.value, r, ratio_tol);
      });
      if (it == groups.end()) {
        groups.push_back({r, {{m, n}}, false});
      } else {
        it->witnesses.push_back({m, n});
      }
    }
  }
  // The diagonal pairs all land in the group whose value is exactly 1.
  for (auto& g : groups) {
    if (std::any_of(g.witnesses.begin(), g.witnesses.end(), [](const WitnessPair& w) { return w.m == w.n; })) {
      g.value = {1.0, 0.0};
    }
  }
  std::sort(groups.begin(), groups.end(), [](const ExtendedEigenvalue& a, const ExtendedEigenvalue& c) {
    if (a.value.real() != c.value.real()) return a.value.real() < c.value.real();
    return a.value.imag() < c.value.imag();
  });
  return groups;
}

std::vector<WitnessPair> witnesses_for(const BlaschkeProduct& b, Complex lambda, double ratio_tol) {
  std::vector<WitnessPair> pairs;
  const std::size_t count = b.zero_count();
  for (std::size_t m = 0; m < count; ++m) {
    for (std::size_t n = 0; n < count; ++n) {
      const bool matches = b.zero(n).alpha == kZero
                               ? b.zero(m).alpha == kZero
                               : ratios_coincide(lambda, ratio(b, m, n), ratio_tol);
      if (matches) pairs.push_back({m, n});
    }
  }
  return pairs;
}

Complex witness_ratio(const ModelSpaceBasis& basis, WitnessPair pair, Complex lambda) {
  if (basis.alpha(pair.n) == kZero) return lambda;
  return ratio(basis.product(), pair.m, pair.n);
}

int witness_levels(const ModelSpaceBasis& basis, WitnessPair pair, Complex rho) {
  const int p_m = basis.multiplicity(pair.m);
  const int p_n = basis.multiplicity(pair.n);
  return rho == kZero ? p_n : std::min(p_m, p_n);
}

Matrix closed_form_generator(const ModelSpaceBasis& basis, WitnessPair pair, int level,
                             std::span<const Complex> coefficients, Complex rho) {
  if (level < 0 || level >= witness_levels(basis, pair, rho)) {
    throw std::out_of_range("generator level outside the admissible range for this witness pair");
  }
  if (coefficients.size() != static_cast<std::size_t>(level) + 1) {
    throw std::invalid_argument("generator needs exactly level + 1 free coefficients");
  }
  const int p_m = basis.multiplicity(pair.m);
  const Eigen::Index row_base = basis.offset(pair.m);
  const Eigen::Index col_base = basis.offset(pair.n);
  const Eigen::Index n = basis.dimension();

  Matrix x = Matrix::Zero(n, n);
  for (int k = 0; k <= level; ++k) {
    for (int r = 0; r <= k; ++r) {
      const Complex c = coefficients[k - r];
      const Complex rho_r = ipow(rho, r);
      if (c == kZero || rho_r == kZero) continue;
      // Only reachable with rho = 0 beyond min(p_m, p_n), where rho_r vanishes.
      if (r > p_m - 1) throw std::logic_error("generator row index out of range");
      const double weight = factorial(level + r - k) * factorial(p_m - r - 1) /
                            (factorial(level - k) * factorial(p_m - 1));
      x(row_base + p_m - r - 1, col_base + level - k) += c * rho_r * weight;
    }
  }
  return x;
}

EigenvectorFamily eigenvector_family(const ModelSpaceBasis& basis, Complex lambda, double ratio_tol) {
  const BlaschkeProduct& b = basis.product();
  const auto pairs = witnesses_for(b, lambda, ratio_tol);
  if (pairs.empty()) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " is not a ratio of zeros of B";
    throw Error(ErrorKind::LambdaNotInSpectrum, msg.str());
  }
  EigenvectorFamily family{lambda, {}};
  for (const WitnessPair& w : pairs) {
    const Complex rho = witness_ratio(basis, w, lambda);
    const int levels = witness_levels(basis, w, rho);
    for (int l = 0; l < levels; ++l) {
      std::vector<Complex> c(static_cast<std::size_t>(l) + 1, kZero);
      c[0] = 1.0;
      Generator g;
      g.op = closed_form_generator(basis, w, l, c, rho);
      g.witness = w;
      g.level = l;
      g.coefficients = std::move(c);
      g.origin_witness = l == 0 && basis.alpha(w.m) == kZero && basis.alpha(w.n) == kZero;
      family.generators.push_back(std::move(g));
    }
  }
  return family;
}

int expected_dimension(const ModelSpaceBasis& basis, Complex lambda, double ratio_tol) {
  int total = 0;
  for (const WitnessPair& w : witnesses_for(basis.product(), lambda, ratio_tol)) {
    total += witness_levels(basis, w, witness_ratio(basis, w, lambda));
  }
  return total;
}

Matrix stacked_generators(const EigenvectorFamily& family) {
  if (family.generators.empty()) return Matrix(0, 0);
  const Eigen::Index size = family.generators.front().op.size();
  Matrix stacked(size, static_cast<Eigen::Index>(family.generators.size()));
  for (std::size_t g = 0; g < family.generators.size(); ++g) {
    stacked.col(static_cast<Eigen::Index>(g)) = vectorize(family.generators[g].op);
  }
  return stacked;
}

int family_span_dimension(const EigenvectorFamily& family, double rel_tol, double ambiguity) {
  if (family.generators.empty()) return 0;
  Eigen::JacobiSVD<Matrix> svd(stacked_generators(family));
  return static_cast<int>(numerical_rank(svd.singularValues(), rel_tol, ambiguity));
}

}  // namespace extshift
