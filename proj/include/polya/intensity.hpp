#pragma once

#include "polya/matrix.hpp"
#include "polya/urn.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polya {

/// Intensity matrix: entry (i, j) is a_j times the expected change of the
/// colour-i count when colour j is drawn. Columns index the drawn colour.
RationalMatrix intensity_matrix(const PolyaUrn& urn);

/// Permutation relating two matrices: C(perm[i], perm[j]) = B(i, j), i.e.
/// C = P^-1 B P for the permutation matrix P of perm.
struct PermutationWitness {
  std::vector<std::size_t> perm;

  PermutationWitness inverse() const;
  static PermutationWitness identity(std::size_t n);
  friend bool operator==(const PermutationWitness&, const PermutationWitness&) = default;
};

inline constexpr std::size_t kDefaultPermutationCap = 16;

/// The matrix C with C(perm[i], perm[j]) = B(i, j).
RationalMatrix conjugate(const RationalMatrix& b, const PermutationWitness& w);

/// True when `w` is a permutation with C(perm[i], perm[j]) = B(i, j).
bool is_similarity_witness(const RationalMatrix& b, const RationalMatrix& c,
                           const PermutationWitness& w);

/// Witness that B and C are permutation similar, or nullopt. Backtracking
/// search pruned by diagonal value and row/column entry multisets; GI-hard in
/// general, hence the cap (SizeCapExceeded).
std::optional<PermutationWitness> permutation_similar(const RationalMatrix& b,
                                                      const RationalMatrix& c,
                                                      std::size_t cap = kDefaultPermutationCap);

/// Closed form of the product-urn intensity entry at row (k,l), column (i,j):
/// [j = l] A_ki + [i = k] A'_lj.
Rational product_intensity_entry(const PolyaUrn& u, const PolyaUrn& u2,
                                 std::pair<std::size_t, std::size_t> drawn,
                                 std::pair<std::size_t, std::size_t> affected);

struct PhiReport {
  bool additive = false;        // intensity(u ⊔ u2) == A ⊕ A'
  bool multiplicative = false;  // intensity(u × u2) == A ⊞ A'
  bool closed_form = false;     // every product entry matches product_intensity_entry
  bool relabelled = false;      // randomly relabelled copies are permutation similar
  std::string detail;

  bool pass() const { return additive && multiplicative && closed_form && relabelled; }
};

/// Checks that the intensity map sends ⊔ to ⊕ and × to ⊞. `seed` drives the
/// random relabellings used to exercise permutation_similar.
PhiReport verify_phi_morphism(const PolyaUrn& u, const PolyaUrn& u2, std::uint64_t seed = 0,
                              std::size_t cap = kDefaultPermutationCap);

/// Exact check of (A ⊞ B)^n = sum_k C(n,k) A^(n-k) ⊗ B^k.
bool matrix_power_identity(const RationalMatrix& a, const RationalMatrix& b, unsigned n);

}  // namespace polya
