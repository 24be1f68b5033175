#include "extshift/random_instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "extshift/errors.hpp"
#include "extshift/extended_spectrum.hpp"

namespace extshift {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  Complex point_in_annulus() {
    const double radius = real(kMinModulus, kMaxModulus);
    const double angle = real(0.0, 2.0 * std::numbers::pi);
    return std::polar(radius, angle);
  }

 private:
  std::mt19937_64 engine_;
};

bool admissible(Complex candidate, const std::vector<Zero>& existing) {
  const double modulus = std::abs(candidate);
  if (modulus < kMinModulus || modulus > kMaxModulus) return false;
  return std::all_of(existing.begin(), existing.end(),
                     [&](const Zero& z) { return std::abs(z.alpha - candidate) >= kMinSeparation; });
}

// Every ratio of the instance, plus the probe -1 standing in for generic
// non-ratio lambdas, must keep the intertwining equation well separated.
bool well_separated(const std::vector<Zero>& zeros) {
  const BlaschkeProduct b = BlaschkeProduct::validate(zeros);
  if (intertwining_gap(b, {-1.0, 0.0}) < kMinIntertwiningGap) return false;
  for (const ExtendedEigenvalue& e : extended_spectrum(b)) {
    if (intertwining_gap(b, e.value) < kMinIntertwiningGap) return false;
  }
  return true;
}

// Random composition of `total` into `parts` positive integers.
std::vector<int> composition(Sampler& s, int total, int parts) {
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < parts - 1) {
    const int c = s.integer(1, total - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int previous = 0;
  for (int c : cuts) {
    sizes.push_back(c - previous);
    previous = c;
  }
  sizes.push_back(total - previous);
  return sizes;
}

constexpr int kAttempts = 200;

}  // namespace

double intertwining_gap(const BlaschkeProduct& b, Complex lambda, double ratio_tol) {
  const auto witnesses = witnesses_for(b, lambda, ratio_tol);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < b.zero_count(); ++m) {
    for (std::size_t n = 0; n < b.zero_count(); ++n) {
      if (std::find(witnesses.begin(), witnesses.end(), WitnessPair{m, n}) != witnesses.end()) continue;
      const double delta = std::abs(b.zero(m).alpha - lambda * b.zero(n).alpha) / (1.0 + std::abs(lambda));
      const int p_m = b.zero(m).multiplicity;
      const int p_n = b.zero(n).multiplicity;
      // chain weights in the dual basis run up to p - 1
      gap = std::min(gap, std::pow(delta, p_m + p_n - 1) / (factorial(p_m - 1) * factorial(p_n - 1)));
    }
  }
  return gap;
}

RandomInstance random_instance(std::uint64_t seed, const RandomOptions& options) {
  if (options.max_degree < 1) {
    throw Error(ErrorKind::InvalidInput, "max_degree must be at least 1");
  }
  Sampler s(seed);
  RandomInstance instance;
  instance.seed = seed;

  const bool plant = options.allow_plant && options.max_degree >= 3 && s.coin();
  const int min_zeros = plant ? 3 : 1;

  for (;;) {
    const int degree = s.integer(min_zeros, options.max_degree);
    const int count = options.simple_only ? degree : s.integer(min_zeros, degree);
    const std::vector<int> multiplicities =
        options.simple_only ? std::vector<int>(count, 1) : composition(s, degree, count);

    std::vector<Zero> zeros;
    const int free_zeros = plant ? count - 1 : count;
    for (int attempt = 0; attempt < kAttempts && static_cast<int>(zeros.size()) < free_zeros; ++attempt) {
      const Complex candidate = s.point_in_annulus();
      if (admissible(candidate, zeros)) zeros.push_back({candidate, multiplicities[zeros.size()]});
    }
    if (static_cast<int>(zeros.size()) < free_zeros) continue;

    if (plant) {
      bool planted = false;
      for (int attempt = 0; attempt < kAttempts && !planted; ++attempt) {
        const int a = s.integer(0, free_zeros - 1);
        const int b = s.integer(0, free_zeros - 1);
        const int d = s.integer(0, free_zeros - 1);
        if (a == b || d == b) continue;
        const Complex lambda = zeros[a].alpha / zeros[b].alpha;
        const Complex candidate = lambda * zeros[d].alpha;
        if (!admissible(candidate, zeros)) continue;
        zeros.push_back({candidate, multiplicities.back()});
        instance.planted_ratio = lambda;
        planted = true;
      }
      if (!planted) continue;
    }
    if (!well_separated(zeros)) continue;
    instance.zeros = std::move(zeros);
    return instance;
  }
}

RandomInstance random_instance(std::uint64_t seed, int max_degree) {
  return random_instance(seed, RandomOptions{max_degree, false, true});
}

}  // namespace extshift
