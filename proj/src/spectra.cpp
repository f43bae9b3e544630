#include "polya/spectra.hpp"

#include "polya/error.hpp"
#include "polya/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

namespace polya {

namespace {

bool canonical_less(const SpectrumElement& a, const SpectrumElement& b) {
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

SpectrumMultiset SpectrumMultiset::from_points(const std::vector<std::complex<double>>& points,
                                               double tol) {
  std::vector<SpectrumElement> elements;
  elements.reserve(points.size());
  for (const auto& p : points) elements.push_back({p, 1});
  return from_elements(elements, tol);
}

SpectrumMultiset SpectrumMultiset::from_elements(const std::vector<SpectrumElement>& elements,
                                                 double tol) {
  const std::size_t n = elements.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(elements[i].value - elements[j].value) <= tol)
        parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<std::complex<double>> weighted(n);
  std::vector<std::size_t> mult(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].multiplicity == 0) continue;
    const std::size_t r = find_root(parent, i);
    weighted[r] += elements[i].value * static_cast<double>(elements[i].multiplicity);
    mult[r] += elements[i].multiplicity;
  }
  SpectrumMultiset out;
  for (std::size_t r = 0; r < n; ++r)
    if (mult[r] > 0) out.elements_.push_back({weighted[r] / static_cast<double>(mult[r]), mult[r]});
  std::sort(out.elements_.begin(), out.elements_.end(), canonical_less);
  return out;
}

std::size_t SpectrumMultiset::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : elements_) total += e.multiplicity;
  return total;
}

std::vector<std::complex<double>> SpectrumMultiset::points() const {
  std::vector<std::complex<double>> out;
  for (const auto& e : elements_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

SpectrumMultiset spectrum(const RationalMatrix& a, double tol) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "spectrum of non-square matrix");
  std::vector<SpectrumElement> elements;
  for (const auto& [factor, exponent] : squarefree_decomposition(characteristic_polynomial(a))) {
    for (const auto& root : simple_roots(factor))
      elements.push_back({root, static_cast<std::size_t>(exponent)});
  }
  return SpectrumMultiset::from_elements(elements, tol);
}

SpectrumMultiset spectrum(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "spectrum of non-square matrix");
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::ConvergenceFailure, "dense eigensolve did not converge");
  std::vector<std::complex<double>> points(solver.eigenvalues().begin(), solver.eigenvalues().end());
  return SpectrumMultiset::from_points(points, tol);
}

SpectrumMultiset multiset_union(const SpectrumMultiset& m, const SpectrumMultiset& m2, double tol) {
  std::vector<SpectrumElement> all = m.elements();
  all.insert(all.end(), m2.elements().begin(), m2.elements().end());
  return SpectrumMultiset::from_elements(all, tol);
}

SpectrumMultiset minkowski_sum(const SpectrumMultiset& m, const SpectrumMultiset& m2, double tol) {
  std::vector<SpectrumElement> sums;
  for (const auto& x : m.elements())
    for (const auto& y : m2.elements())
      sums.push_back({x.value + y.value, x.multiplicity * y.multiplicity});
  return SpectrumMultiset::from_elements(sums, tol);
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<std::ptrdiff_t>& match_right, std::vector<bool>& visited) {
  for (std::size_t v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = true;
    if (match_right[v] < 0 ||
        augment(static_cast<std::size_t>(match_right[v]), adj, match_right, visited)) {
      match_right[v] = static_cast<std::ptrdiff_t>(u);
      return true;
    }
  }
  return false;
}

}  // namespace

bool multiset_approx_equal(const SpectrumMultiset& m, const SpectrumMultiset& m2, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "matching tolerance must be positive");
  const auto left = m.points();
  const auto right = m2.points();
  if (left.size() != right.size()) return false;
  const std::size_t n = left.size();

  // Greedy pass over the shared canonical order settles the common case.
  bool greedy = true;
  for (std::size_t i = 0; i < n && greedy; ++i) greedy = std::abs(left[i] - right[i]) <= tol;
  if (greedy) return true;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(left[i] - right[j]) <= tol) adj[i].push_back(j);
  std::vector<std::ptrdiff_t> match_right(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> visited(n, false);
    if (!augment(i, adj, match_right, visited)) return false;
  }
  return true;
}

SigmaReport verify_sigma_morphism(const RationalMatrix& a, const RationalMatrix& b, double tol,
                                  std::size_t operand_cap) {
  if (a.rows() > operand_cap || b.rows() > operand_cap)
    throw Error(ErrorKind::SizeCapExceeded, "sigma check operands exceed size cap " +
                                                std::to_string(operand_cap));
  SigmaReport report;
  const SpectrumMultiset sa = spectrum(a, tol);
  const SpectrumMultiset sb = spectrum(b, tol);

  report.sum_spectrum = spectrum(kronecker_sum(a, b), tol);
  report.minkowski = minkowski_sum(sa, sb, tol);
  report.multiplicative = multiset_approx_equal(report.sum_spectrum, report.minkowski, tol);
  if (!report.multiplicative) report.detail += "spectrum of Kronecker sum differs from Minkowski sum; ";

  report.additive =
      multiset_approx_equal(spectrum(direct_sum(a, b), tol), multiset_union(sa, sb, tol), tol);
  if (!report.additive) report.detail += "spectrum of direct sum differs from union; ";
  return report;
}

}  // namespace polya
