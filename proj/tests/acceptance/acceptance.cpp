// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extshift/cli.hpp"
#include "extshift/errors.hpp"
#include "extshift/extended_spectrum.hpp"
#include "extshift/operators.hpp"
#include "extshift/oracle.hpp"
#include "extshift/random_instance.hpp"
#include "extshift/report.hpp"
#include "../test_support.hpp"

using namespace extshift;

namespace {

constexpr int kCorpusSize = 50;
constexpr int kCorpusDegree = 8;
constexpr int kNonRatioSamples = 20;

struct Instance {
  std::uint64_t seed = 0;
  std::vector<Zero> zeros;
  bool planted = false;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string describe(Complex z) {
  std::ostringstream s;
  s << z;
  return s.str();
}

std::string seed_tag(std::uint64_t seed) { return "seed " + std::to_string(seed) + ": "; }

Matrix stack(const std::vector<Matrix>& matrices) {
  Matrix q(matrices.front().size(), static_cast<Eigen::Index>(matrices.size()));
  for (std::size_t j = 0; j < matrices.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = vectorize(matrices[j]);
  return q;
}

// lambda = r e^{i theta} with log-uniform r in [0.1, 10], kept only when no
// pair (m, n) comes close to alpha_m = lambda alpha_n.
Complex non_ratio_sample(const BlaschkeProduct& b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log_r(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    const Complex lambda = std::polar(std::exp(log_r(rng)), theta(rng));
    if (!witnesses_for(b, lambda).empty()) continue;
    if (intertwining_gap(b, lambda) >= kMinIntertwiningGap) return lambda;
  }
}

void report(int number, const std::string& name, const Outcome& outcome) {
  std::printf("criterion %d [PRIMARY] %-38s %s (%d checks)%s%s\n", number, name.c_str(), outcome.pass ? "PASS" : "FAIL",
              outcome.checks, outcome.detail.empty() ? "" : " - ", outcome.detail.c_str());
}

// Criteria 1, 2, 9 share the oracle solves.
void spectrum_and_eigenvectors(const std::vector<Instance>& corpus, Outcome& equality, Outcome& spaces,
                               Outcome& inclusion) {
  std::mt19937_64 rng(20240601);
  for (const Instance& inst : corpus) {
    try {
      const auto b = BlaschkeProduct::validate(inst.zeros);
      const ModelSpaceBasis basis(b);
      const Matrix s = shift_matrix_dual(basis).entries;
      for (const auto& entry : extended_spectrum(b)) {
        const auto null = sylvester_nullspace(s, entry.value);
        ++equality.checks;
        if (null.matrices.empty()) equality.fail(seed_tag(inst.seed) + "empty nullspace at " + describe(entry.value));

        const auto family = eigenvector_family(basis, entry.value);
        const auto match = subspace_match(family, null);
        ++spaces.checks;
        if (!match.match || match.dim_closed_form != expected_dimension(basis, entry.value)) {
          spaces.fail(seed_tag(inst.seed) + "lambda " + describe(entry.value) + " dims " +
                      std::to_string(match.dim_closed_form) + "/" + std::to_string(match.dim_oracle) + " angle " +
                      std::to_string(match.max_principal_angle));
        }

        ++inclusion.checks;
        if (!verify_inclusion(b, entry.value)) inclusion.fail(seed_tag(inst.seed) + describe(entry.value));
      }
      for (int k = 0; k < kNonRatioSamples; ++k) {
        const Complex lambda = non_ratio_sample(b, rng);
        ++equality.checks;
        const auto null = sylvester_nullspace(s, lambda);
        if (!null.matrices.empty()) {
          equality.fail(seed_tag(inst.seed) + "nullspace of dimension " + std::to_string(null.matrices.size()) +
                        " at non-ratio " + describe(lambda));
        }
      }
    } catch (const Error& e) {
      equality.fail(seed_tag(inst.seed) + e.what());
      spaces.fail(seed_tag(inst.seed) + e.what());
    }
  }
}

Outcome simple_uniqueness() {
  Outcome out;
  for (std::uint64_t seed = 5000; seed < 5010; ++seed) {
    const auto inst = random_instance(seed, RandomOptions{kCorpusDegree, true, false});
    try {
      const auto b = BlaschkeProduct::validate(inst.zeros);
      const ModelSpaceBasis basis(b);
      const Matrix s = shift_matrix_dual(basis).entries;
      for (const auto& entry : extended_spectrum(b)) {
        if (entry.value == Complex(1.0)) continue;
        ++out.checks;
        if (entry.witnesses.size() != 1) {
          out.fail(seed_tag(seed) + "ratio coincidence at " + describe(entry.value));
          continue;
        }
        const WitnessPair w = entry.witnesses.front();
        const auto null = sylvester_nullspace(s, entry.value);
        if (null.matrices.size() != 1) {
          out.fail(seed_tag(seed) + "oracle dimension " + std::to_string(null.matrices.size()));
          continue;
        }
        const Matrix unit = testing::matrix_unit(basis.dimension(), basis.offset(w.m), basis.offset(w.n));
        const auto family = eigenvector_family(basis, entry.value);
        const double angle = max_principal_angle(orthonormal_span(vectorize(unit), 1e-10, 100.0), stack(null.matrices));
        if (family.generators.size() != 1 || family.generators.front().op != unit || angle > 1e-8) {
          out.fail(seed_tag(seed) + "lambda " + describe(entry.value) + " angle " + std::to_string(angle));
        }
      }
    } catch (const Error& e) {
      out.fail(seed_tag(seed) + e.what());
    }
  }
  return out;
}

Outcome single_block() {
  Outcome out;
  for (const Complex alpha : {Complex(0.3, 0.0), Complex(0.5, 0.2)}) {
    for (int n = 1; n <= 4; ++n) {
      ++out.checks;
      const std::string tag = "alpha " + describe(alpha) + " n " + std::to_string(n) + ": ";
      try {
        const auto b = BlaschkeProduct::validate(std::vector<Zero>{{alpha, n}});
        const ModelSpaceBasis basis(b);
        const auto spectrum = extended_spectrum(b);
        if (spectrum.size() != 1 || spectrum.front().value != Complex(1.0)) {
          out.fail(tag + "spectrum is not {1}");
          continue;
        }
        const auto family = eigenvector_family(basis, 1.0);
        const Matrix s = shift_matrix_dual(basis).entries;
        if (family_span_dimension(family) != n || sylvester_nullspace(s, 1.0).matrices.size() != static_cast<std::size_t>(n)) {
          out.fail(tag + "dimension is not n");
        }
        const Matrix q = orthonormal_span(stacked_generators(family), 1e-10, 100.0);
        if (testing::projection_residual(q, vectorize(Matrix::Identity(n, n))) > 1e-9) out.fail(tag + "identity not in span");
        for (const auto& g : family.generators) {
          if (intertwining_residual(s, g.op, 1.0) > 1e-9 * g.op.norm()) out.fail(tag + "generator does not commute");
        }
      } catch (const Error& e) {
        out.fail(tag + e.what());
      }
    }
  }
  return out;
}

Outcome origin_zero() {
  Outcome out;
  for (const auto& zeros : std::vector<std::vector<Zero>>{{{0.0, 1}, {0.5, 1}}, {{0.0, 2}, {0.4, 1}}}) {
    try {
      const auto b = BlaschkeProduct::validate(zeros);
      const ModelSpaceBasis basis(b);
      const auto spectrum = extended_spectrum(b);
      ++out.checks;
      if (spectrum.size() != 1 || !spectrum.front().whole_plane) out.fail("whole_plane not reported");
      const Matrix s = shift_matrix_dual(basis).entries;
      const Matrix x = testing::matrix_unit(basis.dimension(), zeros.front().multiplicity - 1, 0);
      ++out.checks;
      if ((s * x).norm() > 1e-12) out.fail("S_B X is not zero");
      for (const Complex lambda : cli::default_samples()) {
        ++out.checks;
        if (intertwining_residual(s, x, lambda) > 1e-10) out.fail("residual at " + describe(lambda));
        const auto null = sylvester_nullspace(s, lambda);
        if (null.matrices.empty() || testing::projection_residual(stack(null.matrices), vectorize(x)) > 1e-9) {
          out.fail("oracle misses the witness at " + describe(lambda));
        }
      }
    } catch (const Error& e) {
      out.fail(e.what());
    }
  }
  return out;
}

Outcome backward_pointwise(const std::vector<Instance>& corpus) {
  Outcome out;
  std::mt19937_64 rng(99);
  for (const Instance& inst : corpus) {
    const ModelSpaceBasis basis(BlaschkeProduct::validate(inst.zeros));
    const Matrix m = backward_shift_matrix(basis).entries;
    for (int trial = 0; trial < 20; ++trial) {
      const Vector f = testing::random_vector(rng, basis.dimension());
      const Vector g = m * f;
      const Complex f0 = evaluate_primal(basis, f, 0.0);
      for (int k = 0; k < 10; ++k) {
        const Complex z = testing::random_in_disk(rng, 0.95);
        const Complex expected = (evaluate_primal(basis, f, z) - f0) / z;
        const double scale = testing::difference_quotient_scale(basis, f, g, z);
        ++out.checks;
        if (std::abs(evaluate_primal(basis, g, z) - expected) > 1e-9 * std::max(1.0, scale)) {
          out.fail(seed_tag(inst.seed) + "mismatch at z = " + describe(z));
        }
      }
    }
  }
  return out;
}

Outcome jordan_chains(const std::vector<Instance>& corpus) {
  Outcome out;
  for (const Instance& inst : corpus) {
    const ModelSpaceBasis basis(BlaschkeProduct::validate(inst.zeros));
    for (std::size_t i = 0; i < inst.zeros.size(); ++i) {
      ++out.checks;
      std::vector<int> expected;
      for (int k = 1; k <= inst.zeros[i].multiplicity; ++k) expected.push_back(k);
      expected.push_back(inst.zeros[i].multiplicity);
      try {
        if (jordan_kernel_dims(basis, i) != expected) out.fail(seed_tag(inst.seed) + "zero " + std::to_string(i + 1));
      } catch (const Error& e) {
        out.fail(seed_tag(inst.seed) + e.what());
      }
    }
  }
  return out;
}

int exit_code_for(cli::Command command, const std::vector<Zero>& zeros) {
  cli::RunConfig config;
  config.command = command;
  config.zeros_json = dump(zeros_to_json(zeros));
  return cli::run(config).exit_code;
}

Outcome biorthogonality(const std::vector<Instance>& corpus, int& accepted, int& refused) {
  Outcome out;
  std::vector<std::vector<Zero>> cases;
  for (const Instance& inst : corpus) cases.push_back(inst.zeros);
  // deliberately ill-conditioned: two zeros 1e-9 apart
  const std::vector<Zero> near_pair{{0.5, 1}, {0.5 + 1e-9, 1}};
  cases.push_back(near_pair);

  for (const auto& zeros : cases) {
    ++out.checks;
    const auto b = BlaschkeProduct::validate(zeros);
    try {
      const auto space = ModelSpace::build(b);
      const Eigen::Index n = space.dimension();
      const Matrix pairing = biorthogonality_pairing(space.gram(), space.dual());
      const double deviation = (pairing - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
      ++accepted;
      if (deviation > 1e-9 * space.gram().condition_estimate) {
        out.fail("deviation " + std::to_string(deviation) + " above 1e-9 * cond");
      }
      if (&zeros == &cases.back()) out.fail("near-coincident zeros were not refused");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned) {
        out.fail(std::string("unexpected error: ") + e.what());
        continue;
      }
      ++refused;
      const int gram_exit = exit_code_for(cli::Command::Gram, zeros);
      const int verify_exit = exit_code_for(cli::Command::Verify, zeros);
      if (gram_exit != cli::kExitRefused || verify_exit != cli::kExitRefused) {
        out.fail("refused instance exited with " + std::to_string(gram_exit) + "/" + std::to_string(verify_exit));
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  std::vector<Instance> corpus;
  int planted = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const auto inst = random_instance(seed, kCorpusDegree);
    corpus.push_back({seed, inst.zeros, inst.planted_ratio.has_value()});
    planted += inst.planted_ratio.has_value();
  }
  std::printf("corpus: %d instances, degree <= %d, %d with planted ratio coincidences\n", kCorpusSize, kCorpusDegree,
              planted);

  Outcome equality, spaces, inclusion;
  spectrum_and_eigenvectors(corpus, equality, spaces, inclusion);
  const Outcome uniqueness = simple_uniqueness();
  const Outcome block = single_block();
  const Outcome origin = origin_zero();
  const Outcome pointwise = backward_pointwise(corpus);
  const Outcome chains = jordan_chains(corpus);
  int accepted = 0, refused = 0;
  Outcome biorth = biorthogonality(corpus, accepted, refused);
  biorth.detail = biorth.pass ? std::to_string(accepted) + " accepted, " + std::to_string(refused) + " refused with exit 3"
                              : biorth.detail;

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60.0) equality.fail("runtime " + std::to_string(seconds) + " s exceeds 60 s");

  report(1, "spectrum equality", equality);
  report(2, "eigenvector-space equality", spaces);
  report(3, "simple-zero uniqueness", uniqueness);
  report(4, "single-block case", block);
  report(5, "origin-zero case", origin);
  report(6, "backward shift pointwise", pointwise);
  report(7, "Jordan chains", chains);
  report(8, "biorthogonality and refusal", biorth);
  report(9, "inclusion", inclusion);
  std::printf("runtime: %.2f s\n", seconds);

  const bool all = equality.pass && spaces.pass && uniqueness.pass && block.pass && origin.pass && pointwise.pass &&
                   chains.pass && biorth.pass && inclusion.pass;
  return all ? 0 : 1;
}
