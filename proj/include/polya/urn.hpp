#pragma once

#include "polya/matrix.hpp"
#include "polya/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polya {

/// Colours are the indices 0..q-1 of an urn; list order is the colour order.
using ColourId = std::size_t;

/// Sparse integer vector over colours. Entries are kept sorted by colour with
/// zeros dropped, so structural equality is value equality.
class IncrementVector {
 public:
  using Entry = std::pair<ColourId, std::int64_t>;

  IncrementVector() = default;
  explicit IncrementVector(std::vector<Entry> entries);

  static IncrementVector unit(ColourId colour, std::int64_t value = 1);
  /// Dense -> sparse.
  static IncrementVector from_dense(std::span<const std::int64_t> dense);

  std::int64_t operator[](ColourId colour) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::int64_t total() const;
  /// Largest colour index referenced plus one (0 for the zero vector).
  std::size_t extent() const;

  /// Coordinate k moves to map[k].
  IncrementVector relabel(std::span<const ColourId> map) const;
  std::vector<std::int64_t> to_dense(std::size_t colour_count) const;

  friend auto operator<=>(const IncrementVector&, const IncrementVector&) = default;
  friend bool operator==(const IncrementVector&, const IncrementVector&) = default;

 private:
  std::vector<Entry> entries_;
};

struct Atom {
  IncrementVector delta;
  Rational prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite-support probability measure on increment vectors. Atoms are kept in
/// canonical order (sorted by increment) with equal increments merged.
class ReplacementMeasure {
 public:
  /// Dirac measure at 0.
  ReplacementMeasure();

  static ReplacementMeasure dirac(IncrementVector at = {});
  /// Merges equal increments and sorts. Throws ProbabilityMass unless every
  /// probability lies in (0,1] and they sum to exactly 1.
  static ReplacementMeasure from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_dirac_zero() const;

  ReplacementMeasure relabel(std::span<const ColourId> map) const;

  friend bool operator==(const ReplacementMeasure&, const ReplacementMeasure&) = default;

 private:
  explicit ReplacementMeasure(std::vector<Atom> canonical) : atoms_(std::move(canonical)) {}
  std::vector<Atom> atoms_;
};

/// Componentwise mean of a replacement measure.
using ExpectationVector = std::vector<Rational>;

/// A generalised Pólya urn: colours 0..q-1, one replacement measure and one
/// activity per colour, and an initial ball configuration. Instances are
/// always valid; construct through make_urn or the named constructors.
class PolyaUrn {
 public:
  std::size_t colour_count() const { return activities_.size(); }
  const std::vector<ReplacementMeasure>& measures() const { return measures_; }
  const ReplacementMeasure& measure(ColourId i) const { return measures_.at(i); }
  const std::vector<Rational>& activities() const { return activities_; }
  const Rational& activity(ColourId i) const { return activities_.at(i); }
  const std::vector<std::int64_t>& initial() const { return initial_; }
  /// Display labels; empty when the urn is unlabelled. Ignored by all algebra.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(ColourId i) const;

  /// Same urn with different display labels (validated for count).
  PolyaUrn with_labels(std::vector<std::string> labels) const;

  /// Structural equality on (measures, activities, initial); labels ignored.
  friend bool operator==(const PolyaUrn& a, const PolyaUrn& b);

 private:
  friend PolyaUrn make_urn(std::size_t, std::vector<ReplacementMeasure>, std::vector<Rational>,
                           std::vector<std::int64_t>, std::vector<std::string>);
  PolyaUrn() = default;

  std::vector<ReplacementMeasure> measures_;
  std::vector<Rational> activities_;
  std::vector<std::int64_t> initial_;
  std::vector<std::string> labels_;
};

/// Validates and builds an urn. Errors: LengthMismatch, InvalidColour,
/// SupportViolation, ZeroActivityRule, NegativeActivity, NegativeInitial.
/// ProbabilityMass is raised earlier, by ReplacementMeasure::from_atoms.
PolyaUrn make_urn(std::size_t colour_count, std::vector<ReplacementMeasure> measures,
                  std::vector<Rational> activities, std::vector<std::int64_t> initial,
                  std::vector<std::string> labels = {});

/// The urn with no colours (additive neutral).
PolyaUrn zero_urn();
/// One colour, activity 0, Dirac-at-0 measure, one ball (multiplicative neutral).
PolyaUrn unit_urn();
/// One colour, activity alpha, Dirac-at-0 measure, one ball.
PolyaUrn scalar_urn(const Rational& alpha);

ExpectationVector expected_replacement(const PolyaUrn& urn, ColourId i);

/// Exact q x q matrix E[xi xi^T] of the colour-i replacement.
RationalMatrix second_moment_matrix(const PolyaUrn& urn, ColourId i);

}  // namespace polya
