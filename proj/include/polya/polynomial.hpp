#pragma once

#include "polya/matrix.hpp"
#include "polya/rational.hpp"

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace polya {

/// Univariate polynomial over Q, coefficients in ascending degree order with
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// det(x I - A), monic of degree n.
Polynomial characteristic_polynomial(const RationalMatrix& a);

/// Yun's algorithm: monic p = prod f_k^k with f_k squarefree and pairwise
/// coprime. Returns the nonconstant factors with their exponents.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

/// Complex roots of a squarefree polynomial: companion-matrix eigenvalues
/// polished by Newton steps in extended precision. Throws ConvergenceFailure.
std::vector<std::complex<double>> simple_roots(const Polynomial& p);

}  // namespace polya
