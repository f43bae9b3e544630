#pragma once

#include "polya/matrix.hpp"
#include "polya/spectra.hpp"
#include "polya/urn.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polya {

/// Classes of the dominance preorder (i dominates j iff (A^n)_{ji} > 0 for
/// some n >= 0), i.e. the strongly connected components of the digraph with
/// an arc i -> j whenever A_{ji} > 0.
struct DominancePartition {
  /// Classes ordered by their smallest colour; members ascending.
  std::vector<std::vector<ColourId>> classes;
  std::vector<std::size_t> class_of;
  /// dominates[s][t]: class s dominates class t (reflexive).
  std::vector<std::vector<bool>> dominates;
  /// The unique maximum class, if any.
  std::optional<std::size_t> dominating_class;

  bool irreducible() const { return classes.size() == 1; }
  bool colour_dominates(ColourId i, ColourId j) const {
    return dominates[class_of[i]][class_of[j]];
  }
};

DominancePartition dominance_partition(const RationalMatrix& intensity);
DominancePartition dominance_partition(const PolyaUrn& urn);

/// Compares the dominance partition of u × u2, computed directly, with the
/// one predicted from the factors: classes C_s × C'_t, the product order, and
/// a dominating class exactly when both factors have one.
bool product_partition_check(const PolyaUrn& u, const PolyaUrn& u2);

/// For every pair of dominance relations i ≻ k in A and j ≻ l in A2 with
/// minimal exponents n, n', checks the exact identity
/// ((A ⊞ A2)^(n+n'))_{(k,l),(i,j)} = C(n+n', n') (A^n)_{ki} (A2^n')_{lj} > 0.
bool verify_dominance_power(const RationalMatrix& a, const RationalMatrix& a2);

struct TopEigen {
  double lambda1 = 0.0;
  std::size_t multiplicity = 0;
  Eigen::VectorXd right_eigenvector;
};

/// Eigenvalue of maximal real part (real for IntMat members), its algebraic
/// multiplicity, and a unit right eigenvector oriented to have positive sum
/// over the dominating class. Throws NonRealTop, ConvergenceFailure.
TopEigen largest_real_eigenvalue(const RationalMatrix& a, double tol = kDefaultSpectrumTol);

struct AssumptionCheck {
  bool holds = false;
  std::string detail;
};

struct AssumptionReport {
  /// Index k holds assumption (A k+1).
  std::array<AssumptionCheck, 6> checks;
  double lambda1 = 0.0;
  /// Largest real part below lambda1 (absent for fewer than two eigenvalues).
  std::optional<double> lambda2_real;
  std::size_t multiplicity_lambda1 = 0;
  /// Second-moment matrices per colour (finite support makes them finite).
  std::vector<RationalMatrix> second_moments;

  const AssumptionCheck& operator[](int assumption) const { return checks.at(assumption - 1); }
  bool all_hold() const;
};

AssumptionReport check_assumptions(const PolyaUrn& urn, double tol = kDefaultSpectrumTol);

struct LimitPrediction {
  double lambda1_sum = 0.0;
  /// v1 and v1' normalised so that <a, v1> = <a', v1'> = 1.
  std::vector<double> v1;
  std::vector<double> v1_prime;
  /// v1 ⊗ v1' in lexicographic order.
  std::vector<double> v;
  double S = 0.0;
  std::vector<double> limit;
};

/// Eigenvector of λ1 scaled so that <a, v> = 1. Throws
/// DegenerateNormalization when <a, v> vanishes.
std::vector<double> normalized_top_eigenvector(const PolyaUrn& urn, double tol = kDefaultSpectrumTol);

/// Almost-sure limit of X(n)/n for u × u2: (λ1 + λ1') (v1 ⊗ v1') / S with
/// S = <1, v1> + <1, v1'>. Throws AssumptionsFail if either factor misses one
/// of (A1)-(A6).
LimitPrediction limit_prediction(const PolyaUrn& u, const PolyaUrn& u2,
                                 double tol = kDefaultSpectrumTol);

/// B = sum_i v1_i a_i B_i.
Eigen::MatrixXd aggregate_B(const PolyaUrn& urn, std::span<const double> v1);

/// Exact check that every second-moment matrix of u × u2 equals
/// w B_i ⊗ E_jj + w' E_ii ⊗ B'_j with w = a_i/(a_i+a'_j), w' = a'_j/(a_i+a'_j)
/// (zero when a_i + a'_j = 0).
bool product_B_entry_identity(const PolyaUrn& u, const PolyaUrn& u2);

struct BIdentityReport {
  bool entrywise_exact = false;
  /// Largest deviation between the aggregate B of the product, assembled from
  /// the product's own normalised eigenvector, and (B ⊗ diag v1' + diag v1 ⊗ B') / S.
  double aggregate_error = 0.0;
  bool aggregate_within_tol = false;
  std::string detail;

  bool pass() const { return entrywise_exact && aggregate_within_tol; }
};

/// Both B-matrix identities for u × u2. Throws AssumptionsFail.
BIdentityReport product_B_identities(const PolyaUrn& u, const PolyaUrn& u2, double tol = 1e-9);

}  // namespace polya
