#pragma once

#include "polya/urn.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace polya {

/// Colour map: source colour i goes to forward[i]. Strict embeddings are
/// injections, strict isomorphisms bijections.
struct ColourBijection {
  std::vector<ColourId> forward;

  std::size_t size() const { return forward.size(); }
  bool is_permutation() const;
  ColourBijection inverse() const;
  /// First this, then `next`.
  ColourBijection then(const ColourBijection& next) const;
  static ColourBijection identity(std::size_t n);

  friend bool operator==(const ColourBijection&, const ColourBijection&) = default;
};

/// Lexicographic flattening of Q x Q': (i, j) <-> i * q' + j.
struct ProductColourIndexing {
  std::size_t q = 0;
  std::size_t q_prime = 0;

  std::size_t size() const { return q * q_prime; }
  std::size_t flat(std::size_t i, std::size_t j) const { return i * q_prime + j; }
  std::pair<std::size_t, std::size_t> split(std::size_t flat_index) const {
    return {flat_index / q_prime, flat_index % q_prime};
  }
};

/// Default colour cap for strict_isomorphic.
inline constexpr std::size_t kDefaultIsomorphismCap = 12;

/// Relabels every atom through `map` into a colour set of size
/// `target_colour_count`. Throws NotInjective / InvalidColour.
ReplacementMeasure pushforward(const ReplacementMeasure& measure, std::span<const ColourId> map,
                               std::size_t target_colour_count);

/// Disjoint union, colours of `u` first.
PolyaUrn disjoint_union(const PolyaUrn& u, const PolyaUrn& u2);

/// Product urn on Q x Q' in lexicographic order. The replacement law of (i,j)
/// mixes the two factor laws with weights a_i : a'_j, or is Dirac at 0 when
/// a_i + a'_j = 0.
PolyaUrn product(const PolyaUrn& u, const PolyaUrn& u2);

/// The urn whose colour map.forward[i] carries the data of colour i of `u`.
PolyaUrn relabel(const PolyaUrn& u, const ColourBijection& map);

/// Checks conditions (measures, activities, initial counts) of a strict
/// embedding of `u` into `u2` along `map`.
bool is_strict_embedding(const PolyaUrn& u, const PolyaUrn& u2, const ColourBijection& map);

/// A bijection witnessing strict isomorphism, or nullopt. Throws
/// SizeCapExceeded when colour_count exceeds `cap`.
std::optional<ColourBijection> strict_isomorphic(const PolyaUrn& u, const PolyaUrn& u2,
                                                 std::size_t cap = kDefaultIsomorphismCap);

}  // namespace polya
