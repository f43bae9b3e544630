#include "polya/graph.hpp"

#include "polya/error.hpp"

#include <algorithm>

namespace polya {

SimpleGraph::SimpleGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

SimpleGraph::SimpleGraph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : adjacency_(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::InvalidGraph, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") references a missing vertex");
  if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
  if (!edges_.insert({std::min(u, v), std::max(u, v)}).second)
    throw Error(ErrorKind::InvalidGraph,
                "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, "a simple cycle needs at least 3 vertices");
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph SimpleGraph::star(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& g2) {
  const std::size_t n2 = g2.vertex_count();
  SimpleGraph out(g.vertex_count() * n2);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const auto& [a, b] : g2.edges()) out.add_edge(v * n2 + a, v * n2 + b);
  for (const auto& [a, b] : g.edges())
    for (std::size_t w = 0; w < n2; ++w) out.add_edge(a * n2 + w, b * n2 + w);
  return out;
}

PolyaUrn walk_urn(const SimpleGraph& g, std::size_t v0) {
  const std::size_t n = g.vertex_count();
  if (v0 >= n) throw Error(ErrorKind::InvalidArgument, "start vertex " + std::to_string(v0) + " missing");
  std::vector<ReplacementMeasure> measures;
  std::vector<Rational> activities;
  std::vector<std::int64_t> initial(n, 0);
  initial[v0] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    activities.emplace_back(static_cast<long>(deg));
    if (deg == 0) {
      measures.push_back(ReplacementMeasure::dirac());
      continue;
    }
    std::vector<Atom> atoms;
    for (std::size_t w : g.neighbours(v))
      atoms.push_back(Atom{IncrementVector({{v, -1}, {w, 1}}), Rational(1, static_cast<long>(deg))});
    measures.push_back(ReplacementMeasure::from_atoms(std::move(atoms)));
  }
  return make_urn(n, std::move(measures), std::move(activities), std::move(initial));
}

std::optional<ColourBijection> verify_walk_product(const SimpleGraph& g, const SimpleGraph& g2,
                                                   std::size_t v0, std::size_t v0_2,
                                                   std::size_t cap) {
  const PolyaUrn lhs = product(walk_urn(g, v0), walk_urn(g2, v0_2));
  const PolyaUrn rhs = walk_urn(cartesian_product(g, g2), v0 * g2.vertex_count() + v0_2);
  return strict_isomorphic(lhs, rhs, cap);
}

}  // namespace polya
