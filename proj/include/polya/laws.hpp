#pragma once

#include "polya/graph.hpp"
#include "polya/matrix.hpp"
#include "polya/random_urn.hpp"
#include "polya/spectra.hpp"
#include "polya/urn.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polya {

/// Outcome of one algebraic law over all trials. On failure the operands of
/// the first failing trial are kept.
struct LawOutcome {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  std::vector<PolyaUrn> urn_counterexample;
  std::vector<RationalMatrix> matrix_counterexample;
  std::string detail;
};

struct LawReport {
  std::vector<LawOutcome> laws;

  bool pass() const;
  const LawOutcome* find(const std::string& name) const;
};

/// The operations under test; replaceable so that mutation tests can inject
/// a broken implementation.
struct UrnOperations {
  std::function<PolyaUrn(const PolyaUrn&, const PolyaUrn&)> add = disjoint_union;
  std::function<PolyaUrn(const PolyaUrn&, const PolyaUrn&)> mul = product;
};

/// Test fixture: the product with a wrong mixture weight, a_i / (a_i + sum a'),
/// in place of a_i / (a_i + a'_j). Breaks distributivity.
UrnOperations corrupted_product_operations();

/// Cap used by the law checkers; products of three 3-colour urns have 27 colours.
inline constexpr std::size_t kLawSearchCap = 64;

/// Samples random urn triples and checks, by exact strict-isomorphism
/// witnesses, associativity/commutativity/neutral element of ⊔ and ×, and
/// both distributive laws. Trial t draws from stream t + 1 of `seed`.
LawReport check_semiring_laws(const UrnSamplerConfig& config, std::size_t trials,
                              std::uint64_t seed, const UrnOperations& ops = {},
                              std::size_t cap = kLawSearchCap);

struct MatrixSamplerConfig {
  std::size_t max_size = 3;
  int max_value = 9;
  /// Chance of drawing the empty matrix.
  double empty_chance = 0.05;
};

struct MatrixOperations {
  std::function<RationalMatrix(const RationalMatrix&, const RationalMatrix&)> add = direct_sum;
  std::function<RationalMatrix(const RationalMatrix&, const RationalMatrix&)> mul = kronecker_sum;
};

/// The matrix semiring (⊕, ⊞) up to permutation similarity, on random IntMat
/// members: associativity, commutativity, neutral and absorbing elements,
/// distributivity, well-definedness under conjugation, and IntMat closure.
/// Commutativity and distributivity are checked both with the explicit
/// size-only witnesses and with permutation_similar.
LawReport check_matrix_semiring_laws(const MatrixSamplerConfig& config, std::size_t trials,
                                     std::uint64_t seed, const MatrixOperations& ops = {},
                                     std::size_t cap = kLawSearchCap);

/// Witness for A ⊕ B ~ B ⊕ A (block swap), sizes p and q.
PermutationWitness block_swap_witness(std::size_t p, std::size_t q);
/// Witness for A ⊞ B ~ B ⊞ A (commutation permutation), sizes p and q.
PermutationWitness commutation_witness(std::size_t p, std::size_t q);
/// Witness for A ⊞ (B ⊕ C) ~ (A ⊞ B) ⊕ (A ⊞ C), sizes p, q, r.
PermutationWitness distribution_witness(std::size_t p, std::size_t q, std::size_t r);

/// Intensity morphism on random urn pairs (stream t + 1 for trial t). Laws:
/// phi_additive, phi_multiplicative, phi_closed_form, phi_relabelled.
LawReport check_phi_trials(const UrnSamplerConfig& config, std::size_t trials,
                           std::uint64_t seed, std::size_t cap = kLawSearchCap);

/// Spectral morphism on random IntMat pairs of sizes 1..max_size. Laws:
/// sigma_additive, sigma_multiplicative.
LawReport check_sigma_trials(std::size_t max_size, std::size_t trials, std::uint64_t seed,
                             double tol = kDefaultSpectrumTol, int max_value = 9);

/// Binomial power identity for random rational matrices of every size in
/// `sizes` and every exponent 0..max_exponent. Law: power_identity.
LawReport check_power_identity(const std::vector<std::size_t>& sizes, unsigned max_exponent,
                               std::size_t trials, std::uint64_t seed);

/// Product structure on random urn pairs. partition_product and
/// dominance_power use `trials` pairs. preserve_A1..preserve_A6 each collect
/// `preservation_pairs` pairs whose factors both satisfy the assumption
/// (rejection sampling over at most `max_attempts` draws) and check the
/// product; too few qualifying pairs is reported as a failure.
LawReport check_product_structure(const UrnSamplerConfig& config, std::size_t trials,
                                  std::size_t preservation_pairs, std::uint64_t seed, std::size_t max_attempts = 20000,
                                  double tol = kDefaultSpectrumTol);

/// Entrywise second-moment identity on `trials` random products. Law:
/// B_entrywise.
LawReport check_B_entrywise(const UrnSamplerConfig& config, std::size_t trials,
                            std::uint64_t seed);

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

/// Walk-urn product against the walk urn of the Cartesian product, for all
/// ordered pairs of `corpus` and all starting vertices. Law: walk_product.
LawReport check_walk_products(const std::vector<NamedGraph>& corpus,
                              std::size_t cap = kLawSearchCap);

/// K2, P3, C4, C5 and the star with three leaves.
std::vector<NamedGraph> standard_graph_corpus();

}  // namespace polya
