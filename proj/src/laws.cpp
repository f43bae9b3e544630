#include "polya/laws.hpp"

#include "polya/algebra.hpp"
#include "polya/analysis.hpp"
#include "polya/error.hpp"
#include "polya/intensity.hpp"

#include <array>
#include <map>

namespace polya {

bool LawReport::pass() const {
  for (const auto& law : laws)
    if (!law.pass) return false;
  return true;
}

const LawOutcome* LawReport::find(const std::string& name) const {
  for (const auto& law : laws)
    if (law.name == name) return &law;
  return nullptr;
}

namespace {

class LawTally {
 public:
  explicit LawTally(std::vector<std::string> names) {
    for (auto& n : names) {
      index_[n] = report_.laws.size();
      LawOutcome outcome;
      outcome.name = n;
      report_.laws.push_back(std::move(outcome));
    }
  }

  template <class Operands>
  void record(const std::string& name, bool ok, const Operands& operands,
              const std::string& detail = {}) {
    LawOutcome& law = report_.laws[index_.at(name)];
    ++law.trials;
    if (ok || !law.pass) return;
    law.pass = false;
    law.detail = detail;
    if constexpr (std::is_same_v<typename Operands::value_type, PolyaUrn>) {
      law.urn_counterexample.assign(operands.begin(), operands.end());
    } else {
      law.matrix_counterexample.assign(operands.begin(), operands.end());
    }
  }

  LawReport take() { return std::move(report_); }

 private:
  LawReport report_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

UrnOperations corrupted_product_operations() {
  UrnOperations ops;
  ops.mul = [](const PolyaUrn& u, const PolyaUrn& u2) {
    const ProductColourIndexing idx{u.colour_count(), u2.colour_count()};
    const std::size_t n = idx.size();
    Rational pooled = 0;
    for (const auto& a : u2.activities()) pooled += a;
    std::vector<ReplacementMeasure> measures;
    std::vector<Rational> activities;
    std::vector<std::int64_t> initial;
    std::vector<ColourId> left(idx.q), right(idx.q_prime);
    for (std::size_t i = 0; i < idx.q; ++i) {
      for (std::size_t j = 0; j < idx.q_prime; ++j) {
        const Rational total = u.activity(i) + u2.activity(j);
        activities.push_back(total);
        initial.push_back(u.initial()[i] * u2.initial()[j]);
        if (total == 0) {
          measures.push_back(ReplacementMeasure::dirac());
          continue;
        }
        for (std::size_t k = 0; k < idx.q; ++k) left[k] = idx.flat(k, j);
        for (std::size_t k = 0; k < idx.q_prime; ++k) right[k] = idx.flat(i, k);
        const Rational w = u.activity(i) / (u.activity(i) + pooled);
        std::vector<Atom> atoms;
        const ReplacementMeasure from_left = pushforward(u.measure(i), left, n);
        const ReplacementMeasure from_right = pushforward(u2.measure(j), right, n);
        if (w > 0)
          for (const auto& atom : from_left.atoms()) atoms.push_back(Atom{atom.delta, w * atom.prob});
        if (w < 1)
          for (const auto& atom : from_right.atoms())
            atoms.push_back(Atom{atom.delta, (1 - w) * atom.prob});
        measures.push_back(ReplacementMeasure::from_atoms(std::move(atoms)));
      }
    }
    return make_urn(n, std::move(measures), std::move(activities), std::move(initial));
  };
  return ops;
}

LawReport check_semiring_laws(const UrnSamplerConfig& config, std::size_t trials,
                              std::uint64_t seed, const UrnOperations& ops, std::size_t cap) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  LawTally tally({"union_associative", "union_commutative", "union_neutral",
                  "product_associative", "product_commutative", "product_neutral",
                  "left_distributive", "right_distributive"});
  const StreamRng root(seed);
  const PolyaUrn zero = zero_urn();
  const PolyaUrn one = unit_urn();

  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    const PolyaUrn u1 = random_urn(rng, config);
    const PolyaUrn u2 = random_urn(rng, config);
    const PolyaUrn u3 = random_urn(rng, config);
    const std::vector<PolyaUrn> pair{u1, u2};
    const std::vector<PolyaUrn> triple{u1, u2, u3};

    auto iso = [&](const PolyaUrn& a, const PolyaUrn& b) {
      return strict_isomorphic(a, b, cap).has_value();
    };
    const auto& add = ops.add;
    const auto& mul = ops.mul;

    tally.record("union_associative", iso(add(add(u1, u2), u3), add(u1, add(u2, u3))), triple);
    tally.record("union_commutative", iso(add(u1, u2), add(u2, u1)), pair);
    tally.record("union_neutral", iso(add(zero, u1), u1) && iso(add(u1, zero), u1),
                 std::vector<PolyaUrn>{u1});
    tally.record("product_associative", iso(mul(mul(u1, u2), u3), mul(u1, mul(u2, u3))), triple);
    tally.record("product_commutative", iso(mul(u1, u2), mul(u2, u1)), pair);
    tally.record("product_neutral", iso(mul(one, u1), u1) && iso(mul(u1, one), u1),
                 std::vector<PolyaUrn>{u1});
    tally.record("left_distributive", iso(mul(u1, add(u2, u3)), add(mul(u1, u2), mul(u1, u3))),
                 triple);
    tally.record("right_distributive", iso(mul(add(u1, u2), u3), add(mul(u1, u3), mul(u2, u3))),
                 triple);
  }
  return tally.take();
}

PermutationWitness block_swap_witness(std::size_t p, std::size_t q) {
  // Index of A ⊕ B  ->  index of B ⊕ A.
  PermutationWitness w{std::vector<std::size_t>(p + q)};
  for (std::size_t i = 0; i < p; ++i) w.perm[i] = q + i;
  for (std::size_t j = 0; j < q; ++j) w.perm[p + j] = j;
  return w;
}

PermutationWitness commutation_witness(std::size_t p, std::size_t q) {
  // (i, j) in A ⊞ B  ->  (j, i) in B ⊞ A.
  PermutationWitness w{std::vector<std::size_t>(p * q)};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) w.perm[i * q + j] = j * p + i;
  return w;
}

PermutationWitness distribution_witness(std::size_t p, std::size_t q, std::size_t r) {
  // (i, k) in A ⊞ (B ⊕ C)  ->  block of A ⊞ B or A ⊞ C.
  PermutationWitness w{std::vector<std::size_t>(p * (q + r))};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < q + r; ++k)
      w.perm[i * (q + r) + k] = k < q ? i * q + k : p * q + i * r + (k - q);
  return w;
}

namespace {

RationalMatrix sample_matrix(StreamRng& rng, const MatrixSamplerConfig& config) {
  if (rng.uniform() < config.empty_chance) return RationalMatrix();
  const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(config.max_size)));
  return random_intmat(rng, n, config.max_value);
}

}  // namespace

LawReport check_matrix_semiring_laws(const MatrixSamplerConfig& config, std::size_t trials,
                                     std::uint64_t seed, const MatrixOperations& ops,
                                     std::size_t cap) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  LawTally tally({"sum_associative", "sum_commutative", "sum_neutral", "kron_sum_associative",
                  "kron_sum_commutative", "kron_sum_neutral", "kron_sum_absorbing",
                  "left_distributive", "right_distributive", "well_defined", "intmat_closure"});
  const StreamRng root(seed);
  const RationalMatrix empty;
  const RationalMatrix one(1, 1);

  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    const RationalMatrix a = sample_matrix(rng, config);
    const RationalMatrix b = sample_matrix(rng, config);
    const RationalMatrix c = sample_matrix(rng, config);
    const std::size_t p = a.rows(), q = b.rows(), r = c.rows();
    const std::vector<RationalMatrix> pair{a, b};
    const std::vector<RationalMatrix> triple{a, b, c};
    const auto& add = ops.add;
    const auto& mul = ops.mul;

    auto similar = [&](const RationalMatrix& x, const RationalMatrix& y) {
      return permutation_similar(x, y, cap).has_value();
    };
    // Both the explicit witness and the independent search must succeed.
    auto similar_via = [&](const RationalMatrix& x, const RationalMatrix& y,
                           const PermutationWitness& w) {
      return is_similarity_witness(x, y, w) && similar(x, y);
    };

    tally.record("sum_associative", add(add(a, b), c) == add(a, add(b, c)), triple);
    tally.record("sum_commutative", similar_via(add(a, b), add(b, a), block_swap_witness(p, q)),
                 pair);
    tally.record("sum_neutral", add(empty, a) == a && add(a, empty) == a,
                 std::vector<RationalMatrix>{a});
    tally.record("kron_sum_associative", mul(mul(a, b), c) == mul(a, mul(b, c)), triple);
    tally.record("kron_sum_commutative",
                 similar_via(mul(a, b), mul(b, a), commutation_witness(p, q)), pair);
    tally.record("kron_sum_neutral", mul(one, a) == a && mul(a, one) == a,
                 std::vector<RationalMatrix>{a});
    tally.record("kron_sum_absorbing", mul(empty, a) == empty && mul(a, empty) == empty,
                 std::vector<RationalMatrix>{a});
    tally.record("left_distributive",
                 similar_via(mul(a, add(b, c)), add(mul(a, b), mul(a, c)),
                             distribution_witness(p, q, r)),
                 triple);
    tally.record("right_distributive", similar(mul(add(b, c), a), add(mul(b, a), mul(c, a))),
                 triple);

    const PermutationWitness pa = random_permutation(rng, p);
    const PermutationWitness pb = random_permutation(rng, q);
    const RationalMatrix a2 = conjugate(a, pa);
    const RationalMatrix b2 = conjugate(b, pb);
    tally.record("well_defined",
                 similar(add(a2, b2), add(a, b)) && similar(mul(a2, b2), mul(a, b)) &&
                     similar(a, a2),
                 pair);
    tally.record("intmat_closure", in_intmat(add(a, b)) && in_intmat(mul(a, b)), pair);
  }
  return tally.take();
}

LawReport check_phi_trials(const UrnSamplerConfig& config, std::size_t trials,
                           std::uint64_t seed, std::size_t cap) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  LawTally tally({"phi_additive", "phi_multiplicative", "phi_closed_form", "phi_relabelled"});
  const StreamRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    const PolyaUrn u = random_urn(rng, config);
    const PolyaUrn u2 = random_urn(rng, config);
    const std::vector<PolyaUrn> pair{u, u2};
    const PhiReport r = verify_phi_morphism(u, u2, rng(), cap);
    tally.record("phi_additive", r.additive, pair, r.detail);
    tally.record("phi_multiplicative", r.multiplicative, pair, r.detail);
    tally.record("phi_closed_form", r.closed_form, pair, r.detail);
    tally.record("phi_relabelled", r.relabelled, pair, r.detail);
  }
  return tally.take();
}

LawReport check_sigma_trials(std::size_t max_size, std::size_t trials, std::uint64_t seed,
                             double tol, int max_value) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (max_size == 0) throw Error(ErrorKind::InvalidArgument, "max_size must be at least 1");
  LawTally tally({"sigma_additive", "sigma_multiplicative"});
  const StreamRng root(seed);
  const auto top = static_cast<std::int64_t>(max_size);
  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    const RationalMatrix a = random_intmat(rng, static_cast<std::size_t>(rng.between(1, top)), max_value);
    const RationalMatrix b = random_intmat(rng, static_cast<std::size_t>(rng.between(1, top)), max_value);
    const std::vector<RationalMatrix> pair{a, b};
    const SigmaReport r = verify_sigma_morphism(a, b, tol, max_size);
    tally.record("sigma_additive", r.additive, pair, r.detail);
    tally.record("sigma_multiplicative", r.multiplicative, pair, r.detail);
  }
  return tally.take();
}

LawReport check_power_identity(const std::vector<std::size_t>& sizes, unsigned max_exponent,
                               std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  LawTally tally({"power_identity"});
  const StreamRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    for (std::size_t n : sizes) {
      for (std::size_t m : sizes) {
        const RationalMatrix a = random_matrix(rng, n);
        const RationalMatrix b = random_matrix(rng, m);
        for (unsigned e = 0; e <= max_exponent; ++e)
          tally.record("power_identity", matrix_power_identity(a, b, e),
                       std::vector<RationalMatrix>{a, b}, "exponent " + std::to_string(e));
      }
    }
  }
  return tally.take();
}

LawReport check_product_structure(const UrnSamplerConfig& config, std::size_t trials,
                                  std::size_t preservation_pairs, std::uint64_t seed, std::size_t max_attempts, double tol) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  std::vector<std::string> names{"partition_product", "dominance_power"};
  for (int k = 1; k <= 6; ++k) names.push_back("preserve_A" + std::to_string(k));
  LawTally tally(names);
  const StreamRng root(seed);

  std::array<std::size_t, 6> found{};
  std::size_t attempt = 0;
  auto done = [&] {
    for (std::size_t f : found)
      if (f < preservation_pairs) return false;
    return true;
  };
  for (; attempt < max_attempts && (attempt < trials || !done()); ++attempt) {
    StreamRng rng = root.child(attempt + 1);
    const PolyaUrn u = random_urn(rng, config);
    const PolyaUrn u2 = random_urn(rng, config);
    const std::vector<PolyaUrn> pair{u, u2};
    if (attempt < trials) {
      tally.record("partition_product", product_partition_check(u, u2), pair);
      tally.record("dominance_power",
                   verify_dominance_power(intensity_matrix(u), intensity_matrix(u2)), pair);
    }
    const AssumptionReport ru = check_assumptions(u, tol);
    const AssumptionReport ru2 = check_assumptions(u2, tol);
    std::optional<AssumptionReport> rp;
    for (int k = 1; k <= 6; ++k) {
      auto& count = found[static_cast<std::size_t>(k - 1)];
      if (count >= preservation_pairs || !ru[k].holds || !ru2[k].holds) continue;
      if (!rp) rp = check_assumptions(product(u, u2), tol);
      ++count;
      tally.record("preserve_A" + std::to_string(k), (*rp)[k].holds, pair, (*rp)[k].detail);
    }
  }
  LawReport report = tally.take();
  for (int k = 1; k <= 6; ++k) {
    const std::size_t count = found[static_cast<std::size_t>(k - 1)];
    if (count >= preservation_pairs) continue;
    for (auto& law : report.laws) {
      if (law.name != "preserve_A" + std::to_string(k)) continue;
      law.pass = false;
      law.detail = "only " + std::to_string(count) + " qualifying pairs in " +
                   std::to_string(attempt) + " draws";
    }
  }
  return report;
}

LawReport check_B_entrywise(const UrnSamplerConfig& config, std::size_t trials,
                            std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  LawTally tally({"B_entrywise"});
  const StreamRng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng = root.child(t + 1);
    const PolyaUrn u = random_urn(rng, config);
    const PolyaUrn u2 = random_urn(rng, config);
    tally.record("B_entrywise", product_B_entry_identity(u, u2), std::vector<PolyaUrn>{u, u2});
  }
  return tally.take();
}

LawReport check_walk_products(const std::vector<NamedGraph>& corpus, std::size_t cap) {
  LawTally tally({"walk_product"});
  for (const auto& g : corpus) {
    for (const auto& g2 : corpus) {
      for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) {
        for (std::size_t v2 = 0; v2 < g2.graph.vertex_count(); ++v2) {
          const bool ok = verify_walk_product(g.graph, g2.graph, v, v2, cap).has_value();
          tally.record("walk_product", ok,
                       std::vector<PolyaUrn>{walk_urn(g.graph, v), walk_urn(g2.graph, v2)},
                       g.name + " x " + g2.name + " from (" + std::to_string(v) + "," +
                           std::to_string(v2) + ")");
        }
      }
    }
  }
  return tally.take();
}

std::vector<NamedGraph> standard_graph_corpus() {
  return {{"K2", SimpleGraph::complete(2)},
          {"P3", SimpleGraph::path(3)},
          {"C4", SimpleGraph::cycle(4)},
          {"C5", SimpleGraph::cycle(5)},
          {"S3", SimpleGraph::star(3)}};
}

}  // namespace polya
