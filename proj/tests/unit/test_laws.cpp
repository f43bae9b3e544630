#include "polya/error.hpp"
#include "polya/laws.hpp"

#include <gtest/gtest.h>

using namespace polya;

TEST(SemiringLaws, HoldOnRandomUrns) {
  const LawReport r = check_semiring_laws({}, 60, 1);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.laws.size(), 8u);
  for (const auto& law : r.laws) EXPECT_EQ(law.trials, 60u) << law.name;
}

TEST(SemiringLaws, DegenerateZeroSampler) {
  UrnSamplerConfig config;
  config.only_zero_urn = true;
  EXPECT_TRUE(check_semiring_laws(config, 10, 2).pass());
}

TEST(SemiringLaws, DeterministicForAFixedSeed) {
  const LawReport a = check_semiring_laws({}, 5, 99, corrupted_product_operations());
  const LawReport b = check_semiring_laws({}, 5, 99, corrupted_product_operations());
  ASSERT_EQ(a.laws.size(), b.laws.size());
  for (std::size_t k = 0; k < a.laws.size(); ++k) {
    EXPECT_EQ(a.laws[k].pass, b.laws[k].pass);
    EXPECT_EQ(a.laws[k].urn_counterexample, b.laws[k].urn_counterexample);
  }
}

TEST(SemiringLaws, MutatedProductBreaksDistributivity) {
  const LawReport r = check_semiring_laws({}, 100, 7, corrupted_product_operations());
  EXPECT_FALSE(r.pass());
  const LawOutcome* left = r.find("left_distributive");
  ASSERT_NE(left, nullptr);
  EXPECT_FALSE(left->pass);
  ASSERT_EQ(left->urn_counterexample.size(), 3u);
  // The stored operands reproduce the failure.
  const auto& c = left->urn_counterexample;
  const auto mul = corrupted_product_operations().mul;
  EXPECT_FALSE(strict_isomorphic(mul(c[0], disjoint_union(c[1], c[2])),
                                 disjoint_union(mul(c[0], c[1]), mul(c[0], c[2])), kLawSearchCap));
}

TEST(SemiringLaws, RejectsZeroTrials) { EXPECT_THROW(check_semiring_laws({}, 0, 1), Error); }

TEST(MatrixLaws, HoldOnRandomIntMat) {
  const LawReport r = check_matrix_semiring_laws({}, 100, 3);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.laws.size(), 11u);
}

TEST(MatrixLaws, BrokenKroneckerSumIsDetected) {
  MatrixOperations ops;
  ops.mul = [](const RationalMatrix& a, const RationalMatrix& b) { return kronecker_product(a, b); };
  const LawReport r = check_matrix_semiring_laws({}, 50, 3, ops);
  EXPECT_FALSE(r.find("kron_sum_neutral")->pass);
}

TEST(Witnesses, ExplicitWitnessesAreValid) {
  const RationalMatrix a{{1, 2}, {3, 4}};
  const RationalMatrix b{{5, 6, 0}, {7, 8, 1}, {0, 2, 9}};
  const RationalMatrix c{{-1}};
  EXPECT_TRUE(is_similarity_witness(direct_sum(a, b), direct_sum(b, a), block_swap_witness(2, 3)));
  EXPECT_TRUE(is_similarity_witness(kronecker_sum(a, b), kronecker_sum(b, a), commutation_witness(2, 3)));
  EXPECT_TRUE(is_similarity_witness(kronecker_sum(a, direct_sum(b, c)),
                                    direct_sum(kronecker_sum(a, b), kronecker_sum(a, c)),
                                    distribution_witness(2, 3, 1)));
}

TEST(PhiTrials, Pass) { EXPECT_TRUE(check_phi_trials({}, 50, 4).pass()); }

TEST(SigmaTrials, Pass) { EXPECT_TRUE(check_sigma_trials(4, 30, 5).pass()); }

TEST(PowerIdentity, Pass) { EXPECT_TRUE(check_power_identity({2, 3}, 4, 3, 6).pass()); }

TEST(ProductStructure, PassAndCollectEnoughPairs) {
  const LawReport r = check_product_structure({}, 30, 10, 7);
  EXPECT_TRUE(r.pass());
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(r.find("preserve_A" + std::to_string(k))->trials, 10u);
}

TEST(ProductStructure, ReportsShortfallAsFailure) {
  UrnSamplerConfig config;
  config.only_zero_urn = true;  // zero urns never satisfy A3
  const LawReport r = check_product_structure(config, 5, 5, 8, 50);
  EXPECT_FALSE(r.find("preserve_A3")->pass);
  EXPECT_TRUE(r.find("preserve_A1")->pass);
}

TEST(WalkProducts, StandardCorpus) {
  const auto corpus = standard_graph_corpus();
  ASSERT_EQ(corpus.size(), 5u);
  EXPECT_TRUE(check_walk_products(corpus).pass());
}
