#include "polya/stats.hpp"

#include "polya/error.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <numeric>

namespace polya {

namespace {

double upper_tail(double statistic, std::size_t dof) {
  if (dof == 0) return 1.0;
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareResult chi_square_goodness_of_fit(const std::vector<std::uint64_t>& observed,
                                           const std::vector<double>& probabilities) {
  if (observed.size() != probabilities.size())
    throw Error(ErrorKind::LengthMismatch, "observed and probabilities differ in length");
  const double n = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult r;
  std::size_t used = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const auto o = static_cast<double>(observed[k]);
    if (probabilities[k] <= 0.0) {
      if (observed[k] != 0) {
        r.statistic = INFINITY;
        r.p_value = 0.0;
        return r;
      }
      continue;
    }
    const double e = n * probabilities[k];
    r.statistic += (o - e) * (o - e) / e;
    ++used;
  }
  r.dof = used > 0 ? used - 1 : 0;
  r.p_value = upper_tail(r.statistic, r.dof);
  return r;
}

ChiSquareResult two_sample_chi_square(const std::vector<std::uint64_t>& first,
                                      const std::vector<std::uint64_t>& second) {
  if (first.size() != second.size())
    throw Error(ErrorKind::LengthMismatch, "histograms differ in length");
  const double n1 = static_cast<double>(std::accumulate(first.begin(), first.end(), std::uint64_t{0}));
  const double n2 = static_cast<double>(std::accumulate(second.begin(), second.end(), std::uint64_t{0}));
  if (n1 == 0.0 || n2 == 0.0) throw Error(ErrorKind::InvalidArgument, "empty sample");
  const double k1 = std::sqrt(n2 / n1);
  const double k2 = std::sqrt(n1 / n2);
  ChiSquareResult r;
  std::size_t used = 0;
  for (std::size_t k = 0; k < first.size(); ++k) {
    const auto a = static_cast<double>(first[k]);
    const auto b = static_cast<double>(second[k]);
    if (a + b == 0.0) continue;
    r.statistic += (k1 * a - k2 * b) * (k1 * a - k2 * b) / (a + b);
    ++used;
  }
  r.dof = used > 0 ? used - 1 : 0;
  r.p_value = upper_tail(r.statistic, r.dof);
  return r;
}

}  // namespace polya
