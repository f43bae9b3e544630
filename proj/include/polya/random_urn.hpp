#pragma once

#include "polya/algebra.hpp"
#include "polya/intensity.hpp"
#include "polya/matrix.hpp"
#include "polya/rng.hpp"
#include "polya/urn.hpp"

#include <cstddef>

namespace polya {

/// Bounds for randomly generated small urns used by the law checkers.
struct UrnSamplerConfig {
  std::size_t min_colours = 1;
  std::size_t max_colours = 3;
  std::size_t max_atoms = 3;
  /// Bound on numerators and denominators of activities.
  int max_value = 9;
  int max_increment = 3;
  int max_initial = 9;
  /// Chance that a colour gets activity 0 (and hence the Dirac-at-0 law).
  double zero_activity_chance = 0.2;
  /// Chance of emitting zero_urn() or unit_urn() outright.
  double neutral_chance = 0.05;
  /// Degenerate sampler: always zero_urn().
  bool only_zero_urn = false;
};

/// p/q with 0 <= p <= max_num, 1 <= q <= max_den (sign optional).
Rational random_rational(StreamRng& rng, int max_num, int max_den, bool allow_negative = false);

PolyaUrn random_urn(StreamRng& rng, const UrnSamplerConfig& config = {});

/// Square matrix with nonnegative off-diagonal rationals and signed diagonal.
RationalMatrix random_intmat(StreamRng& rng, std::size_t n, int max_value = 9);
/// Arbitrary square rational matrix (signed entries).
RationalMatrix random_matrix(StreamRng& rng, std::size_t n, int max_value = 9);

ColourBijection random_bijection(StreamRng& rng, std::size_t n);
PermutationWitness random_permutation(StreamRng& rng, std::size_t n);

}  // namespace polya
