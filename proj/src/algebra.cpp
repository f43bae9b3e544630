#include "polya/algebra.hpp"

#include "polya/detail/bijection_search.hpp"
#include "polya/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace polya {

bool ColourBijection::is_permutation() const {
  std::vector<bool> seen(forward.size(), false);
  for (ColourId c : forward) {
    if (c >= forward.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

ColourBijection ColourBijection::inverse() const {
  if (!is_permutation()) throw Error(ErrorKind::NotInjective, "inverse of a non-bijection");
  ColourBijection inv{std::vector<ColourId>(forward.size())};
  for (std::size_t i = 0; i < forward.size(); ++i) inv.forward[forward[i]] = i;
  return inv;
}

ColourBijection ColourBijection::then(const ColourBijection& next) const {
  ColourBijection out{std::vector<ColourId>(forward.size())};
  for (std::size_t i = 0; i < forward.size(); ++i) out.forward[i] = next.forward.at(forward[i]);
  return out;
}

ColourBijection ColourBijection::identity(std::size_t n) {
  ColourBijection id{std::vector<ColourId>(n)};
  std::iota(id.forward.begin(), id.forward.end(), ColourId{0});
  return id;
}

ReplacementMeasure pushforward(const ReplacementMeasure& measure, std::span<const ColourId> map,
                               std::size_t target_colour_count) {
  std::set<ColourId> image;
  for (ColourId c : map) {
    if (c >= target_colour_count)
      throw Error(ErrorKind::InvalidColour, "map image " + std::to_string(c) +
                                                " outside target of size " +
                                                std::to_string(target_colour_count));
    if (!image.insert(c).second)
      throw Error(ErrorKind::NotInjective, "colour " + std::to_string(c) + " hit twice");
  }
  return measure.relabel(map);
}

namespace {

std::vector<std::string> union_labels(const PolyaUrn& u, const PolyaUrn& u2) {
  if (u.labels().empty() && u2.labels().empty()) return {};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < u.colour_count(); ++i) labels.push_back(u.label(i));
  for (std::size_t i = 0; i < u2.colour_count(); ++i) labels.push_back(u2.label(i));
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      labels[i] = (i < u.colour_count() ? "L:" : "R:") + labels[i];
  }
  return labels;
}

}  // namespace

PolyaUrn disjoint_union(const PolyaUrn& u, const PolyaUrn& u2) {
  const std::size_t q = u.colour_count();
  const std::size_t q2 = u2.colour_count();
  std::vector<ColourId> left(q), right(q2);
  std::iota(left.begin(), left.end(), ColourId{0});
  std::iota(right.begin(), right.end(), q);

  std::vector<ReplacementMeasure> measures;
  std::vector<Rational> activities;
  std::vector<std::int64_t> initial;
  for (std::size_t i = 0; i < q; ++i) {
    measures.push_back(pushforward(u.measure(i), left, q + q2));
    activities.push_back(u.activity(i));
    initial.push_back(u.initial()[i]);
  }
  for (std::size_t i = 0; i < q2; ++i) {
    measures.push_back(pushforward(u2.measure(i), right, q + q2));
    activities.push_back(u2.activity(i));
    initial.push_back(u2.initial()[i]);
  }
  return make_urn(q + q2, std::move(measures), std::move(activities), std::move(initial),
                  union_labels(u, u2));
}

PolyaUrn product(const PolyaUrn& u, const PolyaUrn& u2) {
  const ProductColourIndexing idx{u.colour_count(), u2.colour_count()};
  const std::size_t n = idx.size();

  std::vector<ReplacementMeasure> measures;
  std::vector<Rational> activities;
  std::vector<std::int64_t> initial;
  measures.reserve(n);
  std::vector<ColourId> kappa_left(idx.q), kappa_right(idx.q_prime);

  for (std::size_t i = 0; i < idx.q; ++i) {
    for (std::size_t j = 0; j < idx.q_prime; ++j) {
      const Rational& a = u.activity(i);
      const Rational& b = u2.activity(j);
      const Rational total = a + b;
      activities.push_back(total);
      initial.push_back(u.initial()[i] * u2.initial()[j]);
      if (total == 0) {
        measures.push_back(ReplacementMeasure::dirac());
        continue;
      }
      for (std::size_t k = 0; k < idx.q; ++k) kappa_left[k] = idx.flat(k, j);
      for (std::size_t k = 0; k < idx.q_prime; ++k) kappa_right[k] = idx.flat(i, k);
      std::vector<Atom> atoms;
      if (a > 0) {
        const Rational w = a / total;
        const ReplacementMeasure moved = pushforward(u.measure(i), kappa_left, n);
        for (const auto& atom : moved.atoms())
          atoms.push_back(Atom{atom.delta, w * atom.prob});
      }
      if (b > 0) {
        const Rational w = b / total;
        const ReplacementMeasure moved = pushforward(u2.measure(j), kappa_right, n);
        for (const auto& atom : moved.atoms())
          atoms.push_back(Atom{atom.delta, w * atom.prob});
      }
      measures.push_back(ReplacementMeasure::from_atoms(std::move(atoms)));
    }
  }

  std::vector<std::string> labels;
  if (!u.labels().empty() || !u2.labels().empty()) {
    for (std::size_t i = 0; i < idx.q; ++i)
      for (std::size_t j = 0; j < idx.q_prime; ++j)
        labels.push_back("(" + u.label(i) + "," + u2.label(j) + ")");
  }
  return make_urn(n, std::move(measures), std::move(activities), std::move(initial),
                  std::move(labels));
}

PolyaUrn relabel(const PolyaUrn& u, const ColourBijection& map) {
  const std::size_t q = u.colour_count();
  if (map.size() != q || !map.is_permutation())
    throw Error(ErrorKind::NotInjective, "relabel needs a permutation of the colours");
  std::vector<ReplacementMeasure> measures(q);
  std::vector<Rational> activities(q);
  std::vector<std::int64_t> initial(q);
  std::vector<std::string> labels(u.labels().empty() ? 0 : q);
  for (std::size_t i = 0; i < q; ++i) {
    const ColourId t = map.forward[i];
    measures[t] = pushforward(u.measure(i), map.forward, q);
    activities[t] = u.activity(i);
    initial[t] = u.initial()[i];
    if (!labels.empty()) labels[t] = u.labels()[i];
  }
  return make_urn(q, std::move(measures), std::move(activities), std::move(initial),
                  std::move(labels));
}

bool is_strict_embedding(const PolyaUrn& u, const PolyaUrn& u2, const ColourBijection& map) {
  if (map.size() != u.colour_count()) return false;
  std::set<ColourId> image;
  for (ColourId c : map.forward)
    if (c >= u2.colour_count() || !image.insert(c).second) return false;
  for (std::size_t i = 0; i < u.colour_count(); ++i) {
    const ColourId t = map.forward[i];
    if (u2.activity(t) != u.activity(i)) return false;
    if (u2.initial()[t] != u.initial()[i]) return false;
    if (u2.measure(t) != u.measure(i).relabel(map.forward)) return false;
  }
  return true;
}

namespace {

// Isomorphism-invariant description of colour i relative to the current
// class labels of the colours its atoms touch.
std::string colour_signature(const PolyaUrn& urn, std::size_t i, const std::vector<int>& cls) {
  std::string sig = to_string(urn.activity(i));
  sig += '|';
  sig += std::to_string(urn.initial()[i]);
  std::vector<std::string> atoms;
  for (const auto& atom : urn.measure(i).atoms()) {
    std::vector<std::string> entries;
    for (const auto& [k, x] : atom.delta.entries()) {
      entries.push_back(std::to_string(cls[k]) + (k == i ? "s" : "o") + std::to_string(x));
    }
    std::sort(entries.begin(), entries.end());
    std::string a = to_string(atom.prob) + ':';
    for (const auto& e : entries) a += e + ',';
    atoms.push_back(std::move(a));
  }
  std::sort(atoms.begin(), atoms.end());
  for (const auto& a : atoms) sig += '|' + a;
  return sig;
}

}  // namespace

std::optional<ColourBijection> strict_isomorphic(const PolyaUrn& u, const PolyaUrn& u2,
                                                 std::size_t cap) {
  if (u.colour_count() != u2.colour_count()) return std::nullopt;
  const std::size_t n = u.colour_count();
  if (n > cap)
    throw Error(ErrorKind::SizeCapExceeded, "isomorphism search on " + std::to_string(n) +
                                                " colours exceeds cap " + std::to_string(cap));
  const ColourBijection id = ColourBijection::identity(n);
  if (is_strict_embedding(u, u2, id)) return id;
  auto signature = [&](int side, std::size_t i, const std::vector<int>& cls) {
    return colour_signature(side == 0 ? u : u2, i, cls);
  };
  auto accept = [&](const std::vector<std::size_t>& forward) {
    return is_strict_embedding(u, u2, ColourBijection{forward});
  };
  auto found = detail::find_bijection(n, signature, accept);
  if (!found) return std::nullopt;
  return ColourBijection{std::move(*found)};
}

}  // namespace polya
