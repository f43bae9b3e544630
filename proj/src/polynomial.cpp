#include "polya/polynomial.hpp"

#include "polya/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>

namespace polya {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int m = 0; m <= dd; ++m)
      rem[static_cast<std::size_t>(k + m)] -= factor * divisor.coeffs_[static_cast<std::size_t>(m)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divide(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> factors;
  if (p.degree() < 1) return factors;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f.divide(a).first;
  Polynomial c = df.divide(a).first;
  Polynomial d = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) factors.emplace_back(g, k);
    b = b.divide(g).first;
    c = d.divide(g).first;
    d = c - b.derivative();
  }
  return factors;
}

std::vector<std::complex<double>> simple_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const Polynomial f = p.monic();
  std::vector<long double> coeff(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    coeff[static_cast<std::size_t>(k)] = f.coefficients()[static_cast<std::size_t>(k)].convert_to<long double>();

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(coeff[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::ConvergenceFailure, "companion eigensolve did not converge");

  std::vector<std::complex<long double>> start(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    start[static_cast<std::size_t>(r)] = {solver.eigenvalues()[r].real(), solver.eigenvalues()[r].imag()};

  std::vector<std::complex<double>> roots;
  roots.reserve(start.size());
  for (std::size_t r = 0; r < start.size(); ++r) {
    // Newton may only move a root within half the distance to its nearest
    // neighbour, so that two estimates never collapse onto one root.
    long double radius = std::numeric_limits<long double>::infinity();
    for (std::size_t s = 0; s < start.size(); ++s)
      if (s != r) radius = std::min(radius, std::abs(start[r] - start[s]) / 2);
    std::complex<long double> z = start[r];
    for (int iter = 0; iter < 8; ++iter) {
      std::complex<long double> value = 0, slope = 0;
      for (int k = n; k >= 0; --k) {
        slope = slope * z + value;
        value = value * z + coeff[static_cast<std::size_t>(k)];
      }
      if (std::abs(slope) == 0.0L) break;
      const std::complex<long double> step = value / slope;
      z -= step;
      if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    if (!(std::abs(z - start[r]) < radius)) z = start[r];
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return roots;
}

}  // namespace polya
