#include <gtest/gtest.h>

#include "extshift/errors.hpp"
#include "extshift/extended_spectrum.hpp"
#include "extshift/random_instance.hpp"

namespace extshift {
namespace {

bool same(const RandomInstance& a, const RandomInstance& b) {
  if (a.zeros.size() != b.zeros.size() || a.planted_ratio != b.planted_ratio) return false;
  for (std::size_t k = 0; k < a.zeros.size(); ++k) {
    if (a.zeros[k].alpha != b.zeros[k].alpha || a.zeros[k].multiplicity != b.zeros[k].multiplicity) return false;
  }
  return true;
}

TEST(RandomInstance, Deterministic) {
  EXPECT_TRUE(same(random_instance(42, 6), random_instance(42, 6)));
  EXPECT_FALSE(same(random_instance(42, 6), random_instance(43, 6)));
}

TEST(RandomInstance, RespectsTheSamplingBox) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int max_degree = 1 + static_cast<int>(seed % 8);
    const auto instance = random_instance(seed, max_degree);
    ASSERT_FALSE(instance.zeros.empty());
    int degree = 0;
    for (std::size_t i = 0; i < instance.zeros.size(); ++i) {
      const Zero& z = instance.zeros[i];
      EXPECT_GE(std::abs(z.alpha), kMinModulus - 1e-15);
      EXPECT_LE(std::abs(z.alpha), kMaxModulus + 1e-15);
      EXPECT_GE(z.multiplicity, 1);
      degree += z.multiplicity;
      for (std::size_t j = 0; j < i; ++j) EXPECT_GE(std::abs(z.alpha - instance.zeros[j].alpha), kMinSeparation);
    }
    EXPECT_LE(degree, max_degree);
    EXPECT_NO_THROW(BlaschkeProduct::validate(instance.zeros));
  }
}

TEST(RandomInstance, PlantedRatioHasTwoWitnesses) {
  int planted = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto instance = random_instance(seed, 8);
    if (!instance.planted_ratio) continue;
    ++planted;
    const auto b = BlaschkeProduct::validate(instance.zeros);
    std::size_t off_diagonal = 0;
    for (const WitnessPair& w : witnesses_for(b, *instance.planted_ratio)) off_diagonal += w.m != w.n;
    EXPECT_GE(off_diagonal, 2u) << "seed " << seed;
    const auto spectrum = extended_spectrum(b);
    EXPECT_TRUE(std::any_of(spectrum.begin(), spectrum.end(), [](const auto& e) { return e.witnesses.size() >= 2; }));
  }
  EXPECT_GT(planted, 25);
  EXPECT_LT(planted, 75);
}

TEST(RandomInstance, SimpleOnlyWithoutPlanting) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto instance = random_instance(seed, RandomOptions{6, true, false});
    EXPECT_FALSE(instance.planted_ratio);
    for (const Zero& z : instance.zeros) EXPECT_EQ(z.multiplicity, 1);
  }
}

TEST(RandomInstance, GapAtEveryRatio) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = BlaschkeProduct::validate(random_instance(seed, 8).zeros);
    for (const auto& entry : extended_spectrum(b)) EXPECT_GE(intertwining_gap(b, entry.value), kMinIntertwiningGap);
    EXPECT_GE(intertwining_gap(b, -1.0), kMinIntertwiningGap);
  }
}

TEST(RandomInstance, GapDefinition) {
  const auto b = BlaschkeProduct::validate(std::vector<Zero>{{0.5, 1}, {-0.5, 1}});
  EXPECT_FALSE(std::isinf(intertwining_gap(b, 1.0)));
  // at lambda = 1 the non-witnesses are (0,1) and (1,0), |0.5 + 0.5| / 2
  EXPECT_DOUBLE_EQ(intertwining_gap(b, 1.0), 0.5);
  const auto single = BlaschkeProduct::validate(std::vector<Zero>{{0.5, 1}});
  EXPECT_TRUE(std::isinf(intertwining_gap(single, 1.0)));
}

TEST(RandomInstance, RejectsNonpositiveDegree) {
  try {
    random_instance(1, 0);
    FAIL() << "expected InvalidInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

}  // namespace
}  // namespace extshift
