#pragma once

#include "polya/algebra.hpp"
#include "polya/urn.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace polya {

/// Finite simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit SimpleGraph(std::size_t vertex_count = 0);
  /// Throws InvalidGraph on loops, duplicate edges or bad endpoints.
  SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges);

  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Normalised edges (smaller endpoint first), sorted.
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

  static SimpleGraph complete(std::size_t n);
  /// Path on n vertices.
  static SimpleGraph path(std::size_t n);
  /// Cycle on n >= 3 vertices.
  static SimpleGraph cycle(std::size_t n);
  /// Star with centre 0 and `leaves` leaves.
  static SimpleGraph star(std::size_t leaves);

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::set<Edge> edges_;
};

/// G □ G' on the lexicographic vertex indexing (v, v') -> v * |V'| + v'.
SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& g2);

/// Simple random walk from v0 as an urn: activity = degree, one ball at v0,
/// and a drawn ball at v is replaced by one at a uniform neighbour.
/// Isolated vertices get activity 0 and the Dirac-at-0 law.
PolyaUrn walk_urn(const SimpleGraph& g, std::size_t v0);

/// strict_isomorphic(walk_urn(G,v0) × walk_urn(G',v0'), walk_urn(G □ G', (v0,v0'))).
std::optional<ColourBijection> verify_walk_product(const SimpleGraph& g, const SimpleGraph& g2,
                                                   std::size_t v0, std::size_t v0_2,
                                                   std::size_t cap = kDefaultIsomorphismCap);

}  // namespace polya
