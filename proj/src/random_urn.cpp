#include "polya/random_urn.hpp"

#include <algorithm>
#include <numeric>

namespace polya {

Rational random_rational(StreamRng& rng, int max_num, int max_den, bool allow_negative) {
  Rational r(rng.between(0, max_num), rng.between(1, max_den));
  if (allow_negative && rng.below(2) == 1) r = -r;
  return r;
}

PolyaUrn random_urn(StreamRng& rng, const UrnSamplerConfig& config) {
  if (config.only_zero_urn) return zero_urn();
  if (rng.uniform() < config.neutral_chance) return rng.below(2) == 0 ? zero_urn() : unit_urn();

  const auto q = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(config.min_colours),
                  static_cast<std::int64_t>(config.max_colours)));
  std::vector<ReplacementMeasure> measures;
  std::vector<Rational> activities;
  std::vector<std::int64_t> initial;
  for (std::size_t i = 0; i < q; ++i) {
    initial.push_back(rng.between(0, config.max_initial));
    if (rng.uniform() < config.zero_activity_chance) {
      activities.emplace_back(0);
      measures.push_back(ReplacementMeasure::dirac());
      continue;
    }
    activities.emplace_back(rng.between(1, config.max_value), rng.between(1, config.max_value));

    const auto atom_count = static_cast<std::size_t>(
        rng.between(1, static_cast<std::int64_t>(std::max<std::size_t>(config.max_atoms, 1))));
    std::vector<Atom> atoms;
    std::vector<std::int64_t> weights;
    for (std::size_t k = 0; k < atom_count; ++k) {
      std::vector<IncrementVector::Entry> entries;
      for (std::size_t j = 0; j < q; ++j) {
        if (rng.below(2) == 0) continue;
        const std::int64_t lo = (j == i) ? -1 : 0;
        entries.emplace_back(j, rng.between(lo, config.max_increment));
      }
      atoms.push_back(Atom{IncrementVector(std::move(entries)), Rational(0)});
      weights.push_back(rng.between(1, config.max_value));
    }
    const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    for (std::size_t k = 0; k < atoms.size(); ++k) atoms[k].prob = Rational(weights[k], total);
    measures.push_back(ReplacementMeasure::from_atoms(std::move(atoms)));
  }
  return make_urn(q, std::move(measures), std::move(activities), std::move(initial));
}

RationalMatrix random_intmat(StreamRng& rng, std::size_t n, int max_value) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = random_rational(rng, max_value, max_value, /*allow_negative=*/i == j);
  return m;
}

RationalMatrix random_matrix(StreamRng& rng, std::size_t n, int max_value) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, max_value, max_value, true);
  return m;
}

ColourBijection random_bijection(StreamRng& rng, std::size_t n) {
  ColourBijection b = ColourBijection::identity(n);
  // Fisher-Yates on rng.below so the result does not depend on the standard library.
  for (std::size_t k = n; k > 1; --k) std::swap(b.forward[k - 1], b.forward[rng.below(k)]);
  return b;
}

PermutationWitness random_permutation(StreamRng& rng, std::size_t n) {
  return PermutationWitness{random_bijection(rng, n).forward};
}

}  // namespace polya
