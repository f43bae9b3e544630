#include "fixtures.hpp"
#include "polya/algebra.hpp"
#include "polya/analysis.hpp"
#include "polya/error.hpp"
#include "polya/intensity.hpp"
#include "polya/random_urn.hpp"

#include <gtest/gtest.h>

using namespace polya;
using polya::test::dirac_at;

namespace {

// i dominates j iff (A^n)_{ji} > 0 for some 0 <= n <= q, by explicit powers.
bool dominates_by_powers(const RationalMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return true;
  RationalMatrix p = RationalMatrix::identity(a.rows());
  for (std::size_t n = 1; n <= a.rows(); ++n) {
    p = p * a;
    if (p(j, i) > 0) return true;
  }
  return false;
}

// Urn with off-diagonal-only (nonnegative) intensity so that powers detect
// reachability exactly.
PolyaUrn chain_urn() {
  // Colour 0 adds a colour-1 ball; colour 1 adds only itself.
  return make_urn(2, {dirac_at({{1, 1}}), dirac_at({{1, 1}})}, {1, 1}, {1, 1});
}

}  // namespace

TEST(Dominance, Examples) {
  const DominancePartition c = dominance_partition(test::classic());
  EXPECT_EQ(c.classes.size(), 2u);
  EXPECT_FALSE(c.colour_dominates(0, 1));
  EXPECT_FALSE(c.colour_dominates(1, 0));
  EXPECT_FALSE(c.dominating_class.has_value());

  const DominancePartition f = dominance_partition(test::friedman());
  EXPECT_TRUE(f.irreducible());
  EXPECT_EQ(f.dominating_class, 0u);

  const DominancePartition ch = dominance_partition(chain_urn());
  ASSERT_EQ(ch.classes.size(), 2u);
  EXPECT_TRUE(ch.colour_dominates(0, 1));
  EXPECT_FALSE(ch.colour_dominates(1, 0));
  ASSERT_TRUE(ch.dominating_class);
  EXPECT_EQ(ch.classes[*ch.dominating_class], (std::vector<ColourId>{0}));
}

TEST(Dominance, MatchesBruteForcePowers) {
  StreamRng rng(51);
  UrnSamplerConfig config;
  config.max_colours = 5;
  for (int t = 0; t < 100; ++t) {
    const PolyaUrn u = random_urn(rng, config);
    RationalMatrix a = intensity_matrix(u);
    const DominancePartition d = dominance_partition(a);
    // Shift the diagonal to make it nonnegative; reachability is unchanged.
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += 10;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j)
        EXPECT_EQ(d.colour_dominates(i, j), dominates_by_powers(a, i, j));
  }
}

TEST(Dominance, ProductPartition) {
  const PolyaUrn f = test::friedman(), c = test::classic();
  EXPECT_TRUE(product_partition_check(f, f));
  EXPECT_TRUE(dominance_partition(product(f, f)).irreducible());
  EXPECT_TRUE(product_partition_check(c, f));
  const DominancePartition cf = dominance_partition(product(c, f));
  EXPECT_EQ(cf.classes, (std::vector<std::vector<ColourId>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(product_partition_check(chain_urn(), unit_urn()));
  EXPECT_TRUE(verify_dominance_power(intensity_matrix(chain_urn()), intensity_matrix(f)));
}

TEST(LargestEigenvalue, Examples) {
  const TopEigen id = largest_real_eigenvalue(RationalMatrix::identity(2));
  EXPECT_NEAR(id.lambda1, 1.0, 1e-12);
  EXPECT_EQ(id.multiplicity, 2u);
  const TopEigen sw = largest_real_eigenvalue(RationalMatrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(sw.lambda1, 1.0, 1e-12);
  EXPECT_EQ(sw.multiplicity, 1u);
  EXPECT_NEAR(sw.right_eigenvector[0], sw.right_eigenvector[1], 1e-12);
  EXPECT_GT(sw.right_eigenvector[0], 0.0);
  const TopEigen jb = largest_real_eigenvalue(RationalMatrix{{1, 1}, {0, 1}});
  EXPECT_NEAR(jb.lambda1, 1.0, 1e-12);
  EXPECT_EQ(jb.multiplicity, 2u);
  EXPECT_NEAR(std::abs(jb.right_eigenvector[0]), 1.0, 1e-9);
  EXPECT_NEAR(jb.right_eigenvector[1], 0.0, 1e-9);
}

TEST(Assumptions, Examples) {
  const AssumptionReport f = check_assumptions(test::friedman());
  EXPECT_TRUE(f.all_hold());
  EXPECT_NEAR(f.lambda1, 1.0, 1e-12);
  ASSERT_TRUE(f.lambda2_real);
  EXPECT_NEAR(*f.lambda2_real, -1.0, 1e-12);

  const AssumptionReport c = check_assumptions(test::classic());
  EXPECT_FALSE(c[4].holds);
  EXPECT_FALSE(c[6].holds);
  EXPECT_TRUE(c[1].holds && c[2].holds && c[3].holds);

  const AssumptionReport one = check_assumptions(unit_urn());
  EXPECT_FALSE(one[3].holds);
  EXPECT_FALSE(one.lambda2_real.has_value());

  // No seeded ball in the dominating class {0}.
  const PolyaUrn unseeded = make_urn(2, {dirac_at({{0, 1}, {1, 1}}), dirac_at({{1, 1}})}, {1, 1}, {0, 1});
  EXPECT_FALSE(check_assumptions(unseeded)[5].holds);
}

TEST(Assumptions, ProductEigenvalues) {
  StreamRng rng(52);
  for (int t = 0; t < 40; ++t) {
    const PolyaUrn u = random_urn(rng), v = random_urn(rng);
    if (u.colour_count() == 0 || v.colour_count() == 0) continue;
    const AssumptionReport ru = check_assumptions(u), rv = check_assumptions(v);
    const AssumptionReport rp = check_assumptions(product(u, v));
    EXPECT_NEAR(rp.lambda1, ru.lambda1 + rv.lambda1, 1e-6);
    if (ru.multiplicity_lambda1 == 1 && rv.multiplicity_lambda1 == 1 && rp.lambda2_real) {
      std::optional<double> expected;
      if (rv.lambda2_real) expected = ru.lambda1 + *rv.lambda2_real;
      if (ru.lambda2_real)
        expected = std::max(expected.value_or(-1e300), *ru.lambda2_real + rv.lambda1);
      if (expected) EXPECT_NEAR(*rp.lambda2_real, *expected, 1e-6);
    }
  }
}

TEST(Limit, FriedmanTimesFriedman) {
  const PolyaUrn f = test::friedman();
  const LimitPrediction p = limit_prediction(f, f);
  EXPECT_NEAR(p.lambda1_sum, 2.0, 1e-12);
  EXPECT_NEAR(p.S, 2.0, 1e-12);
  for (double x : p.v1) EXPECT_NEAR(x, 0.5, 1e-12);
  for (double x : p.limit) EXPECT_NEAR(x, 0.25, 1e-12);
}

TEST(Limit, AsymmetricReplacement) {
  const PolyaUrn u = make_urn(2, {dirac_at({{1, 2}}), dirac_at({{0, 2}})}, {1, 1}, {1, 1});
  const PolyaUrn f = test::friedman();
  const LimitPrediction p = limit_prediction(u, f);
  EXPECT_NEAR(p.lambda1_sum, 3.0, 1e-12);
  for (double x : p.v1) EXPECT_NEAR(x, 0.5, 1e-12);
  // S = 1 + 1; limit = 3 * (1/4) / 2.
  for (double x : p.limit) EXPECT_NEAR(x, 0.375, 1e-12);
  // <a x, v1 (x) v1'> = S.
  const PolyaUrn prod = product(u, f);
  double inner = 0.0;
  for (std::size_t k = 0; k < p.v.size(); ++k) inner += to_double(prod.activity(k)) * p.v[k];
  EXPECT_NEAR(inner, p.S, 1e-12);
}

TEST(Limit, RejectsFailingFactor) {
  try {
    limit_prediction(test::friedman(), test::classic());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AssumptionsFail);
    EXPECT_NE(std::string(e.what()).find("A4"), std::string::npos) << e.what();
  }
}

TEST(BMatrix, AggregateExamples) {
  const std::vector<double> half{0.5, 0.5};
  const Eigen::MatrixXd expected = 0.5 * Eigen::MatrixXd::Identity(2, 2);
  EXPECT_TRUE(aggregate_B(test::classic(), half).isApprox(expected));
  EXPECT_TRUE(aggregate_B(test::friedman(), half).isApprox(expected));
  const std::vector<double> one{1.0};
  EXPECT_EQ(aggregate_B(scalar_urn(1), one), Eigen::MatrixXd::Zero(1, 1));
}

TEST(BMatrix, ProductIdentities) {
  const PolyaUrn f = test::friedman();
  EXPECT_TRUE(product_B_entry_identity(f, f));
  EXPECT_TRUE(product_B_entry_identity(test::classic(), unit_urn()));
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(second_moment_matrix(product(test::classic(), unit_urn()), i),
              second_moment_matrix(test::classic(), i));
  const BIdentityReport r = product_B_identities(f, f);
  EXPECT_TRUE(r.pass()) << r.detail;
  EXPECT_LT(r.aggregate_error, 1e-9);
  StreamRng rng(53);
  for (int t = 0; t < 30; ++t) EXPECT_TRUE(product_B_entry_identity(random_urn(rng), random_urn(rng)));
}
