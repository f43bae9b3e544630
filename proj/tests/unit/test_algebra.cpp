#include "fixtures.hpp"
#include "polya/algebra.hpp"
#include "polya/error.hpp"
#include "polya/laws.hpp"
#include "polya/random_urn.hpp"

#include <gtest/gtest.h>

using namespace polya;
using polya::test::dirac_at;

TEST(Pushforward, Examples) {
  const ReplacementMeasure m = dirac_at({{0, 1}});
  const std::vector<ColourId> id{0, 1};
  EXPECT_EQ(pushforward(m, id, 2), m);
  const std::vector<ColourId> to3{3};
  EXPECT_EQ(pushforward(m, to3, 5), dirac_at({{3, 1}}));
  const auto two = ReplacementMeasure::from_atoms(
      {{IncrementVector({{0, 2}}), Rational(1, 3)}, {IncrementVector({{0, -1}, {1, 1}}), Rational(2, 3)}});
  const std::vector<ColourId> swap{1, 0};
  const auto expected = ReplacementMeasure::from_atoms(
      {{IncrementVector({{1, 2}}), Rational(1, 3)}, {IncrementVector({{1, -1}, {0, 1}}), Rational(2, 3)}});
  EXPECT_EQ(pushforward(two, swap, 2), expected);
  const std::vector<ColourId> collide{0, 0};
  EXPECT_THROW(pushforward(two, collide, 2), Error);
}

TEST(DisjointUnion, TwoClassicUrns) {
  const PolyaUrn u = disjoint_union(test::classic(), test::classic());
  EXPECT_EQ(u.colour_count(), 4u);
  EXPECT_EQ(u.activities(), (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_EQ(u.initial(), (std::vector<std::int64_t>{1, 1, 1, 1}));
  for (ColourId i = 0; i < 4; ++i) EXPECT_EQ(u.measure(i), dirac_at({{i, 1}}));
}

TEST(DisjointUnion, NeutralAndCommutative) {
  const PolyaUrn u = test::classic(), f = test::friedman();
  EXPECT_TRUE(strict_isomorphic(disjoint_union(zero_urn(), u), u).has_value());
  const auto w = strict_isomorphic(disjoint_union(u, f), disjoint_union(f, u));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->forward, (std::vector<ColourId>{2, 3, 0, 1}));
}

TEST(Product, OneColourUrns) {
  const PolyaUrn u = make_urn(1, {dirac_at({{0, 1}})}, {1}, {1});
  const PolyaUrn p = product(u, u);
  EXPECT_EQ(p.colour_count(), 1u);
  EXPECT_EQ(p.activity(0), 2);
  EXPECT_EQ(p.measure(0), dirac_at({{0, 1}}));
  EXPECT_EQ(p.initial()[0], 1);
}

TEST(Product, ScalarUrnsAndUnit) {
  const PolyaUrn p = product(scalar_urn(Rational(1, 3)), scalar_urn(2));
  EXPECT_EQ(p, scalar_urn(Rational(7, 3)));
  EXPECT_TRUE(strict_isomorphic(product(unit_urn(), test::classic()), test::classic()).has_value());
}

TEST(Product, MixtureWeightsAndZeroActivity) {
  // a = (2, 0), a' = (1): colour (0,0) mixes 2/3 left and 1/3 right.
  const PolyaUrn u = make_urn(2, {dirac_at({{1, 1}}), ReplacementMeasure()}, {2, 0}, {1, 3});
  const PolyaUrn v = make_urn(1, {dirac_at({{0, 2}})}, {1}, {2});
  const PolyaUrn p = product(u, v);
  ASSERT_EQ(p.colour_count(), 2u);
  EXPECT_EQ(p.activities(), (std::vector<Rational>{3, 1}));
  EXPECT_EQ(p.initial(), (std::vector<std::int64_t>{2, 6}));
  EXPECT_EQ(p.measure(0), ReplacementMeasure::from_atoms({{IncrementVector({{1, 1}}), Rational(2, 3)},
                                                          {IncrementVector({{0, 2}}), Rational(1, 3)}}));
  EXPECT_EQ(p.measure(1), dirac_at({{1, 2}}));

  const PolyaUrn z = product(make_urn(1, {ReplacementMeasure()}, {0}, {1}), unit_urn());
  EXPECT_EQ(z.activity(0), 0);
  EXPECT_TRUE(z.measure(0).is_dirac_zero());
}

TEST(Product, ActivitiesAreVectorBoxplus) {
  StreamRng rng(4);
  for (int t = 0; t < 30; ++t) {
    const PolyaUrn u = random_urn(rng), v = random_urn(rng);
    EXPECT_EQ(product(u, v).activities(), vector_boxplus(u.activities(), v.activities()));
  }
}

TEST(StrictIsomorphic, Examples) {
  const PolyaUrn u = test::classic();
  const auto self = strict_isomorphic(u, u);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, ColourBijection::identity(2));
  EXPECT_TRUE(strict_isomorphic(zero_urn(), zero_urn()).has_value());

  const PolyaUrn asym = make_urn(2, {dirac_at({{0, 1}}), dirac_at({{1, 2}})}, {1, 1}, {1, 3});
  const ColourBijection swap{{1, 0}};
  const auto w = strict_isomorphic(asym, relabel(asym, swap));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, swap);
  EXPECT_FALSE(strict_isomorphic(test::classic(), test::friedman()).has_value());
  EXPECT_FALSE(strict_isomorphic(test::classic(), unit_urn()).has_value());
}

TEST(StrictIsomorphic, CapIsEnforced) {
  PolyaUrn big = zero_urn();
  for (int k = 0; k < 13; ++k) big = disjoint_union(big, scalar_urn(1));
  EXPECT_THROW(strict_isomorphic(big, big), Error);
  EXPECT_TRUE(strict_isomorphic(big, big, 13).has_value());
}

TEST(StrictIsomorphic, IsAnEquivalenceOnRandomRelabellings) {
  StreamRng rng(11);
  for (int t = 0; t < 100; ++t) {
    const PolyaUrn u = random_urn(rng);
    const ColourBijection f = random_bijection(rng, u.colour_count());
    const ColourBijection g = random_bijection(rng, u.colour_count());
    const PolyaUrn v = relabel(u, f), w = relabel(v, g);
    const auto uv = strict_isomorphic(u, v);
    const auto vu = strict_isomorphic(v, u);
    const auto vw = strict_isomorphic(v, w);
    ASSERT_TRUE(uv && vu && vw);
    EXPECT_TRUE(is_strict_embedding(u, v, *uv));
    EXPECT_TRUE(is_strict_embedding(v, u, uv->inverse()));
    EXPECT_TRUE(is_strict_embedding(u, w, uv->then(*vw)));
  }
}

TEST(Product, WellDefinedUnderRelabelling) {
  StreamRng rng(12);
  for (int t = 0; t < 50; ++t) {
    const PolyaUrn u = random_urn(rng), v = random_urn(rng);
    const ColourBijection f = random_bijection(rng, u.colour_count());
    const ColourBijection g = random_bijection(rng, v.colour_count());
    const ProductColourIndexing idx{u.colour_count(), v.colour_count()};
    ColourBijection fg{std::vector<ColourId>(idx.size())};
    for (std::size_t i = 0; i < idx.q; ++i)
      for (std::size_t j = 0; j < idx.q_prime; ++j) fg.forward[idx.flat(i, j)] = idx.flat(f.forward[i], g.forward[j]);
    EXPECT_EQ(product(relabel(u, f), relabel(v, g)), relabel(product(u, v), fg));
    EXPECT_TRUE(strict_isomorphic(disjoint_union(relabel(u, f), relabel(v, g)), disjoint_union(u, v),
                                  kLawSearchCap));
  }
}

TEST(Product, ResultPassesValidation) {
  StreamRng rng(13);
  for (int t = 0; t < 50; ++t) {
    const PolyaUrn p = product(random_urn(rng), random_urn(rng));
    EXPECT_NO_THROW(make_urn(p.colour_count(), p.measures(), p.activities(), p.initial()));
    for (std::size_t k = 0; k < p.colour_count(); ++k)
      if (p.activity(k) == 0) EXPECT_TRUE(p.measure(k).is_dirac_zero());
  }
}

TEST(Labels, UnionAndProductLabels) {
  const PolyaUrn a = test::classic().with_labels({"r", "b"});
  const PolyaUrn b = test::friedman().with_labels({"r", "g"});
  const PolyaUrn u = disjoint_union(a, b);
  EXPECT_EQ(u.labels(), (std::vector<std::string>{"L:r", "L:b", "R:r", "R:g"}));
  EXPECT_EQ(product(a, b).label(1), "(r,g)");
  EXPECT_TRUE(disjoint_union(test::classic(), test::friedman()).labels().empty());
  EXPECT_EQ(a, test::classic());
}
