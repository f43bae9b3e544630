#include "fixtures.hpp"
#include "polya/algebra.hpp"
#include "polya/error.hpp"
#include "polya/graph.hpp"
#include "polya/simulator.hpp"
#include "polya/stats.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using namespace polya;
using polya::test::dirac_at;

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  StreamRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
  StreamRng r(1);
  for (int k = 0; k < 1000; ++k) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(r.below(7), 7u);
  }
}

TEST(Step, ScalarUrnNeverChanges) {
  StreamRng rng(1);
  const PolyaUrn s = scalar_urn(1);
  UrnState state = Simulator(s).initial_state();
  for (int k = 0; k < 10; ++k) {
    state = step(s, state, rng).state;
    EXPECT_EQ(state.counts, (std::vector<std::int64_t>{1}));
  }
  EXPECT_EQ(state.step, 10u);
}

TEST(Step, RemovalLeadsToExtinction) {
  const PolyaUrn u = make_urn(1, {dirac_at({{0, -1}})}, {1}, {1});
  StreamRng rng(1);
  const StepResult r = step(u, Simulator(u).initial_state(), rng);
  EXPECT_EQ(r.state.counts, (std::vector<std::int64_t>{0}));
  EXPECT_TRUE(r.state.extinct);
  EXPECT_THROW(step(u, r.state, rng), Error);
  const SimulationTrace t = run(u, 100, 2);
  EXPECT_EQ(t.final_state().step, 1u);
  EXPECT_TRUE(t.final_state().extinct);
}

TEST(Step, ClassicUrnFirstDrawFrequencies) {
  const PolyaUrn c = test::classic();
  const Simulator sim(c);
  StreamRng rng(5);
  std::vector<std::uint64_t> hits(2, 0);
  for (int k = 0; k < 100000; ++k) {
    UrnState s = sim.initial_state();
    ++hits[sim.step(s, rng).colour];
    EXPECT_EQ(s.counts[0] + s.counts[1], 3);
  }
  EXPECT_GT(chi_square_goodness_of_fit(hits, {0.5, 0.5}).p_value, 1e-3);
}

TEST(Step, DrawProbabilitiesFollowActivityTimesCount) {
  // a = (1, 3), X = (2, 1): P(draw 0) = 2/5.
  const PolyaUrn u = make_urn(2, {ReplacementMeasure(), ReplacementMeasure()}, {1, 3}, {2, 1});
  const Simulator sim(u);
  StreamRng rng(6);
  std::vector<std::uint64_t> hits(2, 0);
  UrnState s = sim.initial_state();
  for (int k = 0; k < 100000; ++k) ++hits[sim.step(s, rng).colour];
  EXPECT_GT(chi_square_goodness_of_fit(hits, {0.4, 0.6}).p_value, 1e-3);
}

TEST(Run, ZeroStepsAndDeterminism) {
  const PolyaUrn c = test::classic();
  const SimulationTrace t0 = run(c, 0, 1);
  ASSERT_EQ(t0.states.size(), 1u);
  EXPECT_THROW(normalized_composition(t0), Error);
  const SimulationTrace a = run(c, 500, 9), b = run(c, 500, 9);
  EXPECT_EQ(a.states, b.states);
  EXPECT_EQ(a.draws, b.draws);
  EXPECT_EQ(a.rng_name, std::string(StreamRng::kName));
  EXPECT_NE(run(c, 500, 10).states, a.states);
}

TEST(Run, ConsecutiveStatesDifferByOneAtom) {
  StreamRng pick(3);
  const PolyaUrn u = make_urn(
      2,
      {ReplacementMeasure::from_atoms({{IncrementVector({{0, -1}, {1, 2}}), Rational(1, 3)},
                                       {IncrementVector({{0, 1}}), Rational(2, 3)}}),
       dirac_at({{0, 1}})},
      {1, 2}, {1, 1});
  const SimulationTrace t = run(u, 2000, 4);
  for (std::size_t k = 1; k < t.states.size(); ++k) {
    const Draw& d = t.draws[k - 1];
    const auto delta = u.measure(d.colour).atoms()[d.atom].delta.to_dense(2);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_EQ(t.states[k].counts[i], t.states[k - 1].counts[i] + delta[i]);
      EXPECT_GE(t.states[k].counts[i], 0);
    }
  }
}

TEST(Run, ClassicUrnBallCount) {
  const SimulationTrace t = Simulator(test::classic()).run(1'000'000, 3, 0, RunOptions{1'000'000, false});
  const auto& c = t.final_state().counts;
  EXPECT_EQ(c[0] + c[1], 1'000'002);
  const auto comp = normalized_composition(t);
  EXPECT_NEAR(comp[0] + comp[1], 1.0, 1e-5);
  EXPECT_TRUE(t.draws.empty());
}

TEST(Replicas, IndependentOfThreadCount) {
  const Simulator sim(product(test::friedman(), test::friedman()));
  const auto one = sim.run_replicas(2000, 5, 6, RunOptions{100, true}, 1);
  const auto many = sim.run_replicas(2000, 5, 6, RunOptions{100, true}, 4);
  ASSERT_EQ(one.size(), 6u);
  for (std::size_t r = 0; r < one.size(); ++r) {
    EXPECT_EQ(one[r].stream, r + 1);
    EXPECT_EQ(one[r].states, many[r].states);
    EXPECT_EQ(one[r].states, sim.run(2000, 5, r + 1, RunOptions{100, true}).states);
  }
  EXPECT_NE(one[0].states, one[1].states);
}

TEST(Replicas, FriedmanProductComposition) {
  const Simulator sim(product(test::friedman(), test::friedman()));
  const auto traces = sim.run_replicas(1'000'000, 11, 2, RunOptions{1'000'000, false});
  for (const auto& t : traces)
    for (double x : normalized_composition(t)) EXPECT_NEAR(x, 0.25, 0.25 * 0.02);
}

TEST(ForProduct, SameChainAsMergedProduct) {
  // One-step transition law from a fixed state agrees with the merged urn.
  const PolyaUrn u = test::classic();
  const PolyaUrn v = test::friedman();
  const Simulator tagged = Simulator::for_product(u, v);
  const Simulator merged(product(u, v));
  std::map<std::vector<std::int64_t>, std::uint64_t> a, b;
  StreamRng r1(1), r2(2);
  for (int k = 0; k < 50000; ++k) {
    UrnState s1 = tagged.initial_state(), s2 = merged.initial_state();
    tagged.step(s1, r1);
    merged.step(s2, r2);
    ++a[s1.counts];
    ++b[s2.counts];
  }
  std::vector<std::uint64_t> ha, hb;
  for (const auto& [k, n] : a) {
    ha.push_back(n);
    hb.push_back(b[k]);
  }
  for (const auto& [k, n] : b)
    if (!a.count(k)) {
      ha.push_back(0);
      hb.push_back(n);
    }
  EXPECT_GT(two_sample_chi_square(ha, hb).p_value, 1e-3);
}

TEST(Slowed, AlphaZeroIsIdentity) {
  const PolyaUrn u = test::classic();
  const SimulationTrace t = Simulator::for_product(u, scalar_urn(0)).run(200, 1);
  const SlowedEmbedding e = slowed_embedding(t);
  ASSERT_EQ(e.tau.size(), 201u);
  for (std::size_t k = 0; k < e.tau.size(); ++k) EXPECT_EQ(e.tau[k], k);
  EXPECT_EQ(e.states, t.states);
  EXPECT_TRUE(e.constant_between);
}

TEST(Slowed, RejectsUnsuitableTraces) {
  const PolyaUrn u = test::classic();
  EXPECT_THROW(slowed_embedding(run(u, 10, 1)), Error);
  EXPECT_THROW(slowed_embedding(Simulator::for_product(u, u).run(10, 1)), Error);
  EXPECT_THROW(slowed_embedding(Simulator::for_product(u, scalar_urn(1)).run(10, 1, 0, RunOptions{2, true})),
               Error);
}

TEST(Slowed, UnitActivitiesGiveHalfUSideDraws) {
  const SimulationTrace t = Simulator::for_product(test::classic(), scalar_urn(1)).run(100000, 2);
  const SlowedEmbedding e = slowed_embedding(t);
  const double fraction = static_cast<double>(e.tau.size() - 1) / 100000.0;
  EXPECT_GE(fraction, 0.49);
  EXPECT_LE(fraction, 0.51);
  EXPECT_TRUE(e.constant_between);
}

TEST(WalkUrn, SimulationFollowsRandomWalkKernel) {
  const SimpleGraph g = SimpleGraph::star(3);
  const PolyaUrn u = walk_urn(g, 0);
  const Simulator sim(u);
  StreamRng rng(8);
  std::vector<std::uint64_t> from_centre(4, 0), from_leaf(4, 0);
  UrnState s = sim.initial_state();
  std::size_t at = 0;
  for (int k = 0; k < 100000; ++k) {
    sim.step(s, rng);
    EXPECT_EQ(std::accumulate(s.counts.begin(), s.counts.end(), std::int64_t{0}), 1);
    std::size_t next = 0;
    while (s.counts[next] == 0) ++next;
    ++(at == 0 ? from_centre : from_leaf)[next];
    at = next;
  }
  EXPECT_GT(chi_square_goodness_of_fit(from_centre, {0, 1.0 / 3, 1.0 / 3, 1.0 / 3}).p_value, 1e-3);
  EXPECT_GT(chi_square_goodness_of_fit(from_leaf, {1, 0, 0, 0}).p_value, 1e-3);
}

TEST(WalkUrn, TriangleKeepsOneBall) {
  const SimulationTrace t = run(walk_urn(SimpleGraph::complete(3), 1), 1000, 3);
  for (const auto& s : t.states) EXPECT_EQ(std::accumulate(s.counts.begin(), s.counts.end(), std::int64_t{0}), 1);
}

TEST(Stats, ChiSquareHelpers) {
  EXPECT_NEAR(chi_square_goodness_of_fit({50, 50}, {0.5, 0.5}).statistic, 0.0, 1e-12);
  EXPECT_LT(chi_square_goodness_of_fit({90, 10}, {0.5, 0.5}).p_value, 1e-6);
  EXPECT_EQ(chi_square_goodness_of_fit({1, 1}, {1.0, 0.0}).p_value, 0.0);
  const ChiSquareResult r = two_sample_chi_square({10, 20, 0}, {10, 20, 0});
  EXPECT_EQ(r.dof, 1u);
  EXPECT_NEAR(r.p_value, 1.0, 1e-12);
  EXPECT_LT(two_sample_chi_square({100, 0}, {0, 100}).p_value, 1e-6);
}
