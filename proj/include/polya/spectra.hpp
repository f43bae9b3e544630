#pragma once

#include "polya/matrix.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace polya {

inline constexpr double kDefaultSpectrumTol = 1e-6;
inline constexpr std::size_t kDefaultSigmaOperandCap = 8;

struct SpectrumElement {
  std::complex<double> value;
  std::size_t multiplicity = 1;
};

/// Finite multiset of complex numbers. Points closer than the clustering
/// tolerance (single linkage) are merged into one element at their weighted
/// mean; elements are kept sorted by (real, imaginary).
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;

  static SpectrumMultiset from_points(const std::vector<std::complex<double>>& points,
                                      double tol = kDefaultSpectrumTol);
  static SpectrumMultiset from_elements(const std::vector<SpectrumElement>& elements,
                                        double tol = kDefaultSpectrumTol);

  const std::vector<SpectrumElement>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  std::size_t total_multiplicity() const;
  /// Every element repeated by its multiplicity, in canonical order.
  std::vector<std::complex<double>> points() const;

 private:
  std::vector<SpectrumElement> elements_;
};

/// Eigenvalues with algebraic multiplicity of an exact matrix. Multiplicities
/// come from the exact squarefree factorisation of the characteristic
/// polynomial; roots of each factor are found numerically (simple_roots) and
/// then clustered within `tol`. Throws ConvergenceFailure.
SpectrumMultiset spectrum(const RationalMatrix& a, double tol = kDefaultSpectrumTol);
/// Dense double-precision eigensolve followed by clustering within `tol`.
SpectrumMultiset spectrum(const Eigen::MatrixXd& a, double tol = kDefaultSpectrumTol);

/// Multiplicities add.
SpectrumMultiset multiset_union(const SpectrumMultiset& m, const SpectrumMultiset& m2,
                                double tol = kDefaultSpectrumTol);
/// All pairwise sums, multiplicities multiply.
SpectrumMultiset minkowski_sum(const SpectrumMultiset& m, const SpectrumMultiset& m2,
                               double tol = kDefaultSpectrumTol);

/// True iff total multiplicities agree and the expanded point lists admit a
/// perfect matching with every pair within `tol`. Throws InvalidArgument for
/// tol <= 0.
bool multiset_approx_equal(const SpectrumMultiset& m, const SpectrumMultiset& m2, double tol);

struct SigmaReport {
  bool additive = false;        // σ(A ⊕ B) ≈ σ(A) ⊔ σ(B)
  bool multiplicative = false;  // σ(A ⊞ B) ≈ σ(A) + σ(B)
  SpectrumMultiset sum_spectrum;
  SpectrumMultiset minkowski;
  std::string detail;

  bool pass() const { return additive && multiplicative; }
};

/// Compares σ(A ⊞ B) with the Minkowski sum and σ(A ⊕ B) with the union.
/// Operands larger than `operand_cap` raise SizeCapExceeded.
SigmaReport verify_sigma_morphism(const RationalMatrix& a, const RationalMatrix& b,
                                  double tol = kDefaultSpectrumTol,
                                  std::size_t operand_cap = kDefaultSigmaOperandCap);

}  // namespace polya
