#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polya {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of observed counts against category
/// probabilities. Categories with zero probability must be empty.
ChiSquareResult chi_square_goodness_of_fit(const std::vector<std::uint64_t>& observed,
                                           const std::vector<double>& probabilities);

/// Two-sample chi-square homogeneity test on histograms over the same
/// categories; categories empty in both samples are dropped.
ChiSquareResult two_sample_chi_square(const std::vector<std::uint64_t>& first,
                                      const std::vector<std::uint64_t>& second);

}  // namespace polya
