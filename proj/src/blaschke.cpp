#include "extshift/blaschke.hpp"

#include <cmath>
#include <sstream>

#include "extshift/errors.hpp"

namespace extshift {

namespace {

std::string describe(Complex z) {
  std::ostringstream out;
  out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Zero> zeros, int degree, std::optional<std::size_t> origin)
    : zeros_(std::move(zeros)), degree_(degree), origin_(origin) {}

BlaschkeProduct BlaschkeProduct::validate(std::span<const Zero> zeros, double merge_tolerance) {
  if (zeros.empty()) {
    throw Error(ErrorKind::EmptyProduct, "a Blaschke product needs at least one zero");
  }
  int total = 0;
  std::optional<std::size_t> origin;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const Zero& z = zeros[i];
    if (z.multiplicity <= 0) {
      throw Error(ErrorKind::NonpositiveMultiplicity,
                  "zero " + std::to_string(i + 1) + " has multiplicity " + std::to_string(z.multiplicity));
    }
    if (!std::isfinite(z.alpha.real()) || !std::isfinite(z.alpha.imag())) {
      throw Error(ErrorKind::InvalidInput, "zero " + std::to_string(i + 1) + " is not finite");
    }
    if (std::abs(z.alpha) >= 1.0) {
      throw Error(ErrorKind::ZeroOutsideDisk,
                  "zero " + describe(z.alpha) + " does not lie in the open unit disk");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(z.alpha - zeros[j].alpha) <= merge_tolerance) {
        throw Error(ErrorKind::DuplicateZero, "zeros " + std::to_string(j + 1) + " and " +
                                                  std::to_string(i + 1) +
                                                  " coincide; encode repetition as multiplicity");
      }
    }
    if (z.alpha == Complex{0.0, 0.0}) origin = i;
    total += z.multiplicity;
  }
  return BlaschkeProduct({zeros.begin(), zeros.end()}, total, origin);
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex value{1.0, 0.0};
  for (const Zero& zero : zeros_) {
    const Complex den = 1.0 - std::conj(zero.alpha) * z;
    if (std::abs(den) < kPoleFloor) {
      throw Error(ErrorKind::PoleHit, "evaluation point " + describe(z) + " hits the pole of b_" +
                                          describe(zero.alpha));
    }
    value *= ipow((zero.alpha - z) / den, zero.multiplicity);
  }
  return value;
}

Complex evaluate(const BlaschkeProduct& b, Complex z) { return b(z); }

int degree(const BlaschkeProduct& b) { return b.degree(); }

}  // namespace extshift
