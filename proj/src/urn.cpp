#include "polya/urn.hpp"

#include "polya/error.hpp"

#include <algorithm>
#include <map>

namespace polya {

IncrementVector::IncrementVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [colour, value] : entries) {
    if (!entries_.empty() && entries_.back().first == colour) {
      entries_.back().second += value;
    } else {
      entries_.emplace_back(colour, value);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

IncrementVector IncrementVector::unit(ColourId colour, std::int64_t value) {
  return IncrementVector({{colour, value}});
}

IncrementVector IncrementVector::from_dense(std::span<const std::int64_t> dense) {
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) entries.emplace_back(k, dense[k]);
  return IncrementVector(std::move(entries));
}

std::int64_t IncrementVector::operator[](ColourId colour) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), colour,
                             [](const Entry& e, ColourId c) { return e.first < c; });
  return (it != entries_.end() && it->first == colour) ? it->second : 0;
}

std::int64_t IncrementVector::total() const {
  std::int64_t sum = 0;
  for (const auto& e : entries_) sum += e.second;
  return sum;
}

std::size_t IncrementVector::extent() const {
  return entries_.empty() ? 0 : entries_.back().first + 1;
}

IncrementVector IncrementVector::relabel(std::span<const ColourId> map) const {
  std::vector<Entry> moved;
  moved.reserve(entries_.size());
  for (const auto& [colour, value] : entries_) {
    if (colour >= map.size()) throw Error(ErrorKind::InvalidColour, "relabel map too short");
    moved.emplace_back(map[colour], value);
  }
  return IncrementVector(std::move(moved));
}

std::vector<std::int64_t> IncrementVector::to_dense(std::size_t colour_count) const {
  std::vector<std::int64_t> dense(colour_count, 0);
  for (const auto& [colour, value] : entries_) {
    if (colour >= colour_count) throw Error(ErrorKind::InvalidColour, "increment out of range");
    dense[colour] = value;
  }
  return dense;
}

ReplacementMeasure::ReplacementMeasure() : atoms_{Atom{IncrementVector{}, Rational(1)}} {}

ReplacementMeasure ReplacementMeasure::dirac(IncrementVector at) {
  return ReplacementMeasure(std::vector<Atom>{Atom{std::move(at), Rational(1)}});
}

ReplacementMeasure ReplacementMeasure::from_atoms(std::vector<Atom> atoms) {
  std::map<IncrementVector, Rational> merged;
  Rational total = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const Rational& p = atoms[k].prob;
    if (p <= 0 || p > 1)
      throw Error(ErrorKind::ProbabilityMass,
                  "atom " + std::to_string(k) + " has probability " + to_string(p) +
                      " outside (0,1]");
    merged[atoms[k].delta] += p;
    total += p;
  }
  if (total != 1)
    throw Error(ErrorKind::ProbabilityMass,
                "atom probabilities sum to " + to_string(total) + ", not 1");
  std::vector<Atom> canonical;
  canonical.reserve(merged.size());
  for (auto& [delta, p] : merged) canonical.push_back(Atom{delta, p});
  return ReplacementMeasure(std::move(canonical));
}

bool ReplacementMeasure::is_dirac_zero() const {
  return atoms_.size() == 1 && atoms_.front().delta.is_zero();
}

ReplacementMeasure ReplacementMeasure::relabel(std::span<const ColourId> map) const {
  std::vector<Atom> moved;
  moved.reserve(atoms_.size());
  for (const auto& atom : atoms_) moved.push_back(Atom{atom.delta.relabel(map), atom.prob});
  return from_atoms(std::move(moved));
}

std::string PolyaUrn::label(ColourId i) const {
  if (i >= colour_count()) throw Error(ErrorKind::InvalidColour, "no colour " + std::to_string(i));
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

PolyaUrn PolyaUrn::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != colour_count())
    throw Error(ErrorKind::LengthMismatch, "label count differs from colour count");
  PolyaUrn copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

bool operator==(const PolyaUrn& a, const PolyaUrn& b) {
  return a.measures_ == b.measures_ && a.activities_ == b.activities_ && a.initial_ == b.initial_;
}

PolyaUrn make_urn(std::size_t colour_count, std::vector<ReplacementMeasure> measures,
                  std::vector<Rational> activities, std::vector<std::int64_t> initial,
                  std::vector<std::string> labels) {
  if (measures.size() != colour_count || activities.size() != colour_count ||
      initial.size() != colour_count || (!labels.empty() && labels.size() != colour_count))
    throw Error(ErrorKind::LengthMismatch,
                "measures/activities/initial/labels must all have length " +
                    std::to_string(colour_count));
  auto name = [&](std::size_t i) {
    return "colour " + std::to_string(i) + (labels.empty() ? "" : " ('" + labels[i] + "')");
  };
  for (std::size_t i = 0; i < colour_count; ++i) {
    if (activities[i] < 0)
      throw Error(ErrorKind::NegativeActivity, name(i) + " has activity " + to_string(activities[i]));
    if (initial[i] < 0)
      throw Error(ErrorKind::NegativeInitial,
                  name(i) + " has initial count " + std::to_string(initial[i]));
    const auto& atoms = measures[i].atoms();
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      for (const auto& [j, x] : atoms[k].delta.entries()) {
        if (j >= colour_count)
          throw Error(ErrorKind::InvalidColour, name(i) + ", atom " + std::to_string(k) +
                                                    ": increment references colour " +
                                                    std::to_string(j));
        const std::int64_t floor = (j == i) ? -1 : 0;
        if (x < floor)
          throw Error(ErrorKind::SupportViolation,
                      name(i) + ", atom " + std::to_string(k) + ": entry " + std::to_string(x) +
                          " at colour " + std::to_string(j) + " is below " + std::to_string(floor));
      }
    }
    if (activities[i] == 0 && !measures[i].is_dirac_zero())
      throw Error(ErrorKind::ZeroActivityRule,
                  name(i) + " has activity 0 but its measure is not the Dirac measure at 0");
  }
  PolyaUrn urn;
  urn.measures_ = std::move(measures);
  urn.activities_ = std::move(activities);
  urn.initial_ = std::move(initial);
  urn.labels_ = std::move(labels);
  return urn;
}

PolyaUrn zero_urn() { return make_urn(0, {}, {}, {}); }

PolyaUrn unit_urn() { return scalar_urn(0); }

PolyaUrn scalar_urn(const Rational& alpha) {
  return make_urn(1, {ReplacementMeasure::dirac()}, {alpha}, {1});
}

ExpectationVector expected_replacement(const PolyaUrn& urn, ColourId i) {
  ExpectationVector mean(urn.colour_count());
  for (const auto& atom : urn.measure(i).atoms())
    for (const auto& [j, x] : atom.delta.entries()) mean[j] += atom.prob * x;
  return mean;
}

RationalMatrix second_moment_matrix(const PolyaUrn& urn, ColourId i) {
  RationalMatrix m(urn.colour_count(), urn.colour_count());
  for (const auto& atom : urn.measure(i).atoms()) {
    const auto& e = atom.delta.entries();
    for (const auto& [j, xj] : e)
      for (const auto& [k, xk] : e) m(j, k) += atom.prob * Rational(xj * xk);
  }
  return m;
}

}  // namespace polya
