#include "polya/intensity.hpp"

#include "polya/algebra.hpp"
#include "polya/detail/bijection_search.hpp"
#include "polya/error.hpp"
#include "polya/random_urn.hpp"

#include <algorithm>
#include <numeric>

namespace polya {

RationalMatrix intensity_matrix(const PolyaUrn& urn) {
  const std::size_t q = urn.colour_count();
  RationalMatrix a(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    if (urn.activity(j) == 0) continue;
    const ExpectationVector mean = expected_replacement(urn, j);
    for (std::size_t i = 0; i < q; ++i) a(i, j) = urn.activity(j) * mean[i];
  }
  return a;
}

PermutationWitness PermutationWitness::inverse() const {
  PermutationWitness inv{std::vector<std::size_t>(perm.size())};
  for (std::size_t i = 0; i < perm.size(); ++i) inv.perm.at(perm[i]) = i;
  return inv;
}

PermutationWitness PermutationWitness::identity(std::size_t n) {
  PermutationWitness id{std::vector<std::size_t>(n)};
  std::iota(id.perm.begin(), id.perm.end(), std::size_t{0});
  return id;
}

namespace {

bool is_permutation_of(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace

RationalMatrix conjugate(const RationalMatrix& b, const PermutationWitness& w) {
  if (!b.is_square() || !is_permutation_of(w.perm, b.rows()))
    throw Error(ErrorKind::InvalidArgument, "conjugate needs a square matrix and a permutation");
  RationalMatrix c(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(w.perm[i], w.perm[j]) = b(i, j);
  return c;
}

bool is_similarity_witness(const RationalMatrix& b, const RationalMatrix& c,
                           const PermutationWitness& w) {
  if (!b.is_square() || b.rows() != c.rows() || b.cols() != c.cols()) return false;
  if (!is_permutation_of(w.perm, b.rows())) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (c(w.perm[i], w.perm[j]) != b(i, j)) return false;
  return true;
}

std::optional<PermutationWitness> permutation_similar(const RationalMatrix& b,
                                                      const RationalMatrix& c, std::size_t cap) {
  if (!b.is_square() || !c.is_square() || b.rows() != c.rows()) return std::nullopt;
  const std::size_t n = b.rows();
  if (n > cap)
    throw Error(ErrorKind::SizeCapExceeded, "permutation search on size " + std::to_string(n) +
                                                " exceeds cap " + std::to_string(cap));
  auto signature = [&](int side, std::size_t i, const std::vector<int>& cls) {
    const RationalMatrix& m = side == 0 ? b : c;
    std::vector<std::string> row, col;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      row.push_back(std::to_string(cls[j]) + ':' + to_string(m(i, j)));
      col.push_back(std::to_string(cls[j]) + ':' + to_string(m(j, i)));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    std::string sig = to_string(m(i, i)) + "|r";
    for (const auto& e : row) sig += e + ',';
    sig += "|c";
    for (const auto& e : col) sig += e + ',';
    return sig;
  };
  auto accept = [&](const std::vector<std::size_t>& forward) {
    return is_similarity_witness(b, c, PermutationWitness{forward});
  };
  auto found = detail::find_bijection(n, signature, accept);
  if (!found) return std::nullopt;
  return PermutationWitness{std::move(*found)};
}

Rational product_intensity_entry(const PolyaUrn& u, const PolyaUrn& u2,
                                 std::pair<std::size_t, std::size_t> drawn,
                                 std::pair<std::size_t, std::size_t> affected) {
  const auto [i, j] = drawn;
  const auto [k, l] = affected;
  if (i >= u.colour_count() || k >= u.colour_count() || j >= u2.colour_count() ||
      l >= u2.colour_count())
    throw Error(ErrorKind::InvalidColour, "product_intensity_entry index out of range");
  // Only the two columns actually needed are formed.
  Rational entry = 0;
  if (j == l) entry += u.activity(i) * expected_replacement(u, i)[k];
  if (i == k) entry += u2.activity(j) * expected_replacement(u2, j)[l];
  return entry;
}

PhiReport verify_phi_morphism(const PolyaUrn& u, const PolyaUrn& u2, std::uint64_t seed,
                              std::size_t cap) {
  PhiReport report;
  const RationalMatrix a = intensity_matrix(u);
  const RationalMatrix a2 = intensity_matrix(u2);

  report.additive = intensity_matrix(disjoint_union(u, u2)) == direct_sum(a, a2);
  if (!report.additive) report.detail += "intensity of union differs from direct sum; ";

  const PolyaUrn prod = product(u, u2);
  const RationalMatrix a_prod = intensity_matrix(prod);
  report.multiplicative = a_prod == kronecker_sum(a, a2);
  if (!report.multiplicative) report.detail += "intensity of product differs from Kronecker sum; ";

  const ProductColourIndexing idx{u.colour_count(), u2.colour_count()};
  report.closed_form = true;
  for (std::size_t col = 0; col < idx.size() && report.closed_form; ++col) {
    for (std::size_t row = 0; row < idx.size(); ++row) {
      if (a_prod(row, col) != product_intensity_entry(u, u2, idx.split(col), idx.split(row))) {
        report.closed_form = false;
        report.detail += "closed-form entry mismatch at (" + std::to_string(row) + "," +
                         std::to_string(col) + "); ";
        break;
      }
    }
  }

  // Relabelled copies exercise the similarity search; sizes over the cap are skipped.
  StreamRng rng(seed);
  report.relabelled = true;
  const std::size_t union_size = u.colour_count() + u2.colour_count();
  if (union_size <= cap) {
    const PolyaUrn shuffled = relabel(disjoint_union(u, u2), random_bijection(rng, union_size));
    report.relabelled =
        permutation_similar(direct_sum(a, a2), intensity_matrix(shuffled), cap).has_value();
  }
  if (idx.size() <= cap) {
    const PolyaUrn shuffled = relabel(prod, random_bijection(rng, idx.size()));
    report.relabelled =
        report.relabelled &&
        permutation_similar(kronecker_sum(a, a2), intensity_matrix(shuffled), cap).has_value();
  }
  if (!report.relabelled) report.detail += "relabelled copy not permutation similar; ";
  return report;
}

bool matrix_power_identity(const RationalMatrix& a, const RationalMatrix& b, unsigned n) {
  const RationalMatrix lhs = power(kronecker_sum(a, b), n);
  RationalMatrix rhs(lhs.rows(), lhs.cols());
  Integer binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    rhs += Rational(binom) * kronecker_product(power(a, n - k), power(b, k));
    binom = binom * (n - k) / (k + 1);
  }
  return lhs == rhs;
}

}  // namespace polya
