#include "polya/analysis.hpp"

#include "polya/algebra.hpp"
#include "polya/error.hpp"
#include "polya/intensity.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace polya {

DominancePartition dominance_partition(const RationalMatrix& intensity) {
  if (!intensity.is_square())
    throw Error(ErrorKind::InvalidArgument, "dominance partition of non-square matrix");
  const std::size_t q = intensity.rows();
  // reach[i][j]: drawing i can eventually produce j.
  std::vector<std::vector<bool>> reach(q, std::vector<bool>(q, false));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) reach[i][j] = (i == j) || intensity(j, i) > 0;
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < q; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < q; ++j)
          if (reach[k][j]) reach[i][j] = true;

  DominancePartition p;
  p.class_of.assign(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    if (p.class_of[i] != q) continue;
    const std::size_t s = p.classes.size();
    p.classes.emplace_back();
    for (std::size_t j = i; j < q; ++j) {
      if (reach[i][j] && reach[j][i]) {
        p.class_of[j] = s;
        p.classes[s].push_back(j);
      }
    }
  }
  const std::size_t n = p.classes.size();
  p.dominates.assign(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) p.dominates[s][t] = reach[p.classes[s][0]][p.classes[t][0]];
  for (std::size_t s = 0; s < n; ++s) {
    if (std::all_of(p.dominates[s].begin(), p.dominates[s].end(), [](bool b) { return b; })) {
      p.dominating_class = s;
      break;
    }
  }
  return p;
}

DominancePartition dominance_partition(const PolyaUrn& urn) {
  return dominance_partition(intensity_matrix(urn));
}

bool product_partition_check(const PolyaUrn& u, const PolyaUrn& u2) {
  const DominancePartition p = dominance_partition(u);
  const DominancePartition p2 = dominance_partition(u2);
  const DominancePartition direct = dominance_partition(product(u, u2));
  const ProductColourIndexing idx{u.colour_count(), u2.colour_count()};

  // Predicted classes as colour sets, keyed by (s, t).
  std::set<std::vector<ColourId>> predicted;
  for (const auto& cs : p.classes) {
    for (const auto& ct : p2.classes) {
      std::vector<ColourId> members;
      for (ColourId i : cs)
        for (ColourId j : ct) members.push_back(idx.flat(i, j));
      std::sort(members.begin(), members.end());
      predicted.insert(std::move(members));
    }
  }
  const std::set<std::vector<ColourId>> actual(direct.classes.begin(), direct.classes.end());
  if (predicted != actual) return false;

  // Order: (i,j) dominates (k,l) iff i dominates k and j dominates l.
  for (std::size_t x = 0; x < idx.size(); ++x) {
    for (std::size_t y = 0; y < idx.size(); ++y) {
      const auto [i, j] = idx.split(x);
      const auto [k, l] = idx.split(y);
      const bool expected = p.colour_dominates(i, k) && p2.colour_dominates(j, l);
      if (direct.colour_dominates(x, y) != expected) return false;
    }
  }

  const bool expect_dominating = p.dominating_class.has_value() && p2.dominating_class.has_value();
  if (direct.dominating_class.has_value() != expect_dominating) return false;
  if (expect_dominating) {
    const ColourId i = p.classes[*p.dominating_class].front();
    const ColourId j = p2.classes[*p2.dominating_class].front();
    if (direct.class_of[idx.flat(i, j)] != *direct.dominating_class) return false;
  }
  return true;
}

bool verify_dominance_power(const RationalMatrix& a, const RationalMatrix& a2) {
  const std::size_t q = a.rows();
  const std::size_t q2 = a2.rows();
  // Minimal exponents never exceed the size (shortest paths).
  std::vector<RationalMatrix> pa{RationalMatrix::identity(q)}, pa2{RationalMatrix::identity(q2)};
  for (std::size_t n = 1; n <= q; ++n) pa.push_back(pa.back() * a);
  for (std::size_t n = 1; n <= q2; ++n) pa2.push_back(pa2.back() * a2);
  auto min_exponent = [](const std::vector<RationalMatrix>& powers, std::size_t to,
                         std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t n = 0; n < powers.size(); ++n)
      if (powers[n](to, from) > 0) return n;
    return std::nullopt;
  };
  const RationalMatrix sum = kronecker_sum(a, a2);
  std::vector<RationalMatrix> psum{RationalMatrix::identity(q * q2)};
  for (std::size_t n = 1; n <= q + q2; ++n) psum.push_back(psum.back() * sum);

  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t k = 0; k < q; ++k) {
      const auto n = min_exponent(pa, k, i);
      if (!n) continue;
      for (std::size_t j = 0; j < q2; ++j) {
        for (std::size_t l = 0; l < q2; ++l) {
          const auto n2 = min_exponent(pa2, l, j);
          if (!n2) continue;
          Integer binom = 1;
          for (std::size_t m = 0; m < *n2; ++m) binom = binom * (*n + *n2 - m) / (m + 1);
          const Rational expected = Rational(binom) * pa[*n](k, i) * pa2[*n2](l, j);
          const Rational actual = psum[*n + *n2](k * q2 + l, i * q2 + j);
          if (actual != expected || !(actual > 0)) return false;
        }
      }
    }
  }
  return true;
}

TopEigen largest_real_eigenvalue(const RationalMatrix& a, double tol) {
  if (!a.is_square() || a.rows() == 0)
    throw Error(ErrorKind::InvalidArgument, "largest eigenvalue of an empty or non-square matrix");
  const SpectrumMultiset eigen_multiset = spectrum(a, tol);
  double top_re = -std::numeric_limits<double>::infinity();
  for (const auto& e : eigen_multiset.elements()) top_re = std::max(top_re, e.value.real());
  const SpectrumElement* top = nullptr;
  for (const auto& e : eigen_multiset.elements()) {
    if (e.value.real() < top_re - tol) continue;
    if (top == nullptr || std::abs(e.value.imag()) < std::abs(top->value.imag())) top = &e;
  }
  if (std::abs(top->value.imag()) > tol)
    throw Error(ErrorKind::NonRealTop, "eigenvalue of maximal real part has imaginary part " +
                                           std::to_string(top->value.imag()));
  TopEigen out;
  out.lambda1 = top->value.real();
  out.multiplicity = top->multiplicity;

  const std::size_t n = a.rows();
  Eigen::MatrixXd shifted = a.to_eigen() - out.lambda1 * Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
  Eigen::VectorXd v = svd.matrixV().col(static_cast<Eigen::Index>(n) - 1);

  const DominancePartition p = dominance_partition(a);
  double orientation = 0.0;
  if (p.dominating_class)
    for (ColourId i : p.classes[*p.dominating_class]) orientation += v(static_cast<Eigen::Index>(i));
  if (std::abs(orientation) <= tol) orientation = v.sum();
  if (orientation < 0) v = -v;
  out.right_eigenvector = v;
  return out;
}

bool AssumptionReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const AssumptionCheck& c) { return c.holds; });
}

AssumptionReport check_assumptions(const PolyaUrn& urn, double tol) {
  AssumptionReport report;
  const std::size_t q = urn.colour_count();
  report.checks[0] = {true, "structural: replacement supports are validated at construction"};
  for (std::size_t i = 0; i < q; ++i) report.second_moments.push_back(second_moment_matrix(urn, i));
  report.checks[1] = {true, "finite support: all second moments are finite"};
  if (q == 0) {
    for (int k = 2; k < 6; ++k) report.checks[k] = {false, "urn has no colours"};
    return report;
  }

  const RationalMatrix a = intensity_matrix(urn);
  const SpectrumMultiset eigen_multiset = spectrum(a, tol);
  const TopEigen top = largest_real_eigenvalue(a, tol);
  report.lambda1 = top.lambda1;
  report.multiplicity_lambda1 = top.multiplicity;
  std::vector<double> real_parts;
  for (const auto& z : eigen_multiset.points()) real_parts.push_back(z.real());
  std::sort(real_parts.begin(), real_parts.end(), std::greater<>());
  if (real_parts.size() >= 2) report.lambda2_real = std::min(real_parts[1], report.lambda1);

  report.checks[2] = {top.lambda1 > tol, "lambda1 = " + std::to_string(top.lambda1)};
  report.checks[3] = {top.multiplicity == 1,
                      "algebraic multiplicity of lambda1 = " + std::to_string(top.multiplicity)};

  const DominancePartition p = dominance_partition(a);
  if (!p.dominating_class) {
    report.checks[4] = {false, "no dominating class"};
    report.checks[5] = {false, "no dominating class"};
    return report;
  }
  const auto& dominating = p.classes[*p.dominating_class];
  const bool seeded = std::any_of(dominating.begin(), dominating.end(),
                                  [&](ColourId i) { return urn.initial()[i] > 0; });
  report.checks[4] = {seeded, seeded ? "dominating class holds initial balls"
                                     : "no initial ball in the dominating class"};

  RationalMatrix restricted(dominating.size(), dominating.size());
  for (std::size_t r = 0; r < dominating.size(); ++r)
    for (std::size_t c = 0; c < dominating.size(); ++c)
      restricted(r, c) = a(dominating[r], dominating[c]);
  const double restricted_top = largest_real_eigenvalue(restricted, tol).lambda1;
  report.checks[5] = {std::abs(restricted_top - top.lambda1) <= tol,
                      "top eigenvalue on the dominating class = " + std::to_string(restricted_top)};
  return report;
}

std::vector<double> normalized_top_eigenvector(const PolyaUrn& urn, double tol) {
  const TopEigen top = largest_real_eigenvalue(intensity_matrix(urn), tol);
  double dot = 0.0;
  for (std::size_t i = 0; i < urn.colour_count(); ++i)
    dot += to_double(urn.activity(i)) * top.right_eigenvector(static_cast<Eigen::Index>(i));
  if (std::abs(dot) <= tol)
    throw Error(ErrorKind::DegenerateNormalization,
                "<a, v1> = " + std::to_string(dot) + " cannot be normalised to 1");
  std::vector<double> v(urn.colour_count());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = top.right_eigenvector(static_cast<Eigen::Index>(i)) / dot;
  return v;
}

namespace {

void require_assumptions(const PolyaUrn& urn, const char* which, double tol) {
  const AssumptionReport report = check_assumptions(urn, tol);
  for (int k = 1; k <= 6; ++k) {
    if (!report[k].holds)
      throw Error(ErrorKind::AssumptionsFail, std::string(which) + " urn fails (A" +
                                                  std::to_string(k) + "): " + report[k].detail);
  }
}

}  // namespace

LimitPrediction limit_prediction(const PolyaUrn& u, const PolyaUrn& u2, double tol) {
  require_assumptions(u, "first", tol);
  require_assumptions(u2, "second", tol);
  LimitPrediction out;
  out.lambda1_sum = largest_real_eigenvalue(intensity_matrix(u), tol).lambda1 +
                    largest_real_eigenvalue(intensity_matrix(u2), tol).lambda1;
  out.v1 = normalized_top_eigenvector(u, tol);
  out.v1_prime = normalized_top_eigenvector(u2, tol);
  for (double x : out.v1)
    for (double y : out.v1_prime) out.v.push_back(x * y);
  for (double x : out.v1) out.S += x;
  for (double y : out.v1_prime) out.S += y;
  for (double x : out.v) out.limit.push_back(out.lambda1_sum * x / out.S);
  return out;
}

Eigen::MatrixXd aggregate_B(const PolyaUrn& urn, std::span<const double> v1) {
  const std::size_t q = urn.colour_count();
  if (v1.size() != q) throw Error(ErrorKind::LengthMismatch, "v1 length differs from colour count");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q));
  for (std::size_t i = 0; i < q; ++i) {
    if (urn.activity(i) == 0) continue;
    b += v1[i] * to_double(urn.activity(i)) * second_moment_matrix(urn, i).to_eigen();
  }
  return b;
}

bool product_B_entry_identity(const PolyaUrn& u, const PolyaUrn& u2) {
  const PolyaUrn prod = product(u, u2);
  const std::size_t q = u.colour_count();
  const std::size_t q2 = u2.colour_count();
  for (std::size_t i = 0; i < q; ++i) {
    const RationalMatrix bi = second_moment_matrix(u, i);
    for (std::size_t j = 0; j < q2; ++j) {
      const Rational total = u.activity(i) + u2.activity(j);
      RationalMatrix expected(q * q2, q * q2);
      if (total != 0) {
        expected = (u.activity(i) / total) * kronecker_product(bi, RationalMatrix::unit(q2, q2, j, j)) +
                   (u2.activity(j) / total) *
                       kronecker_product(RationalMatrix::unit(q, q, i, i), second_moment_matrix(u2, j));
      }
      if (second_moment_matrix(prod, i * q2 + j) != expected) return false;
    }
  }
  return true;
}

BIdentityReport product_B_identities(const PolyaUrn& u, const PolyaUrn& u2, double tol) {
  BIdentityReport report;
  report.entrywise_exact = product_B_entry_identity(u, u2);
  if (!report.entrywise_exact) report.detail += "second-moment matrix mismatch; ";

  const LimitPrediction lim = limit_prediction(u, u2);
  const PolyaUrn prod = product(u, u2);
  // The product's eigenvector comes from its own eigensolve, not from v1 ⊗ v1'.
  const std::vector<double> v_prod = normalized_top_eigenvector(prod);
  const Eigen::MatrixXd direct = aggregate_B(prod, v_prod);

  const auto q = static_cast<Eigen::Index>(u.colour_count());
  const auto q2 = static_cast<Eigen::Index>(u2.colour_count());
  const Eigen::MatrixXd b = aggregate_B(u, lim.v1);
  const Eigen::MatrixXd b2 = aggregate_B(u2, lim.v1_prime);
  Eigen::MatrixXd diag_v = Eigen::MatrixXd::Zero(q, q);
  Eigen::MatrixXd diag_v2 = Eigen::MatrixXd::Zero(q2, q2);
  for (Eigen::Index i = 0; i < q; ++i) diag_v(i, i) = lim.v1[static_cast<std::size_t>(i)];
  for (Eigen::Index j = 0; j < q2; ++j) diag_v2(j, j) = lim.v1_prime[static_cast<std::size_t>(j)];
  auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd k(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return k;
  };
  const Eigen::MatrixXd closed = (kron(b, diag_v2) + kron(diag_v, b2)) / lim.S;
  report.aggregate_error = (direct - closed).cwiseAbs().maxCoeff();
  report.aggregate_within_tol = report.aggregate_error <= tol;
  if (!report.aggregate_within_tol)
    report.detail += "aggregate B deviates by " + std::to_string(report.aggregate_error) + "; ";
  return report;
}

}  // namespace polya
