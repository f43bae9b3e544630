#pragma once

#include "polya/urn.hpp"

#include <vector>

namespace polya::test {

inline ReplacementMeasure dirac_at(std::vector<IncrementVector::Entry> entries) {
  return ReplacementMeasure::dirac(IncrementVector(std::move(entries)));
}

/// Adds one ball of the drawn colour; a = (1,1), X(0) = (1,1).
inline PolyaUrn classic() {
  return make_urn(2, {dirac_at({{0, 1}}), dirac_at({{1, 1}})}, {1, 1}, {1, 1});
}

/// Adds one ball of the other colour; a = (1,1), X(0) = (1,1).
inline PolyaUrn friedman() {
  return make_urn(2, {dirac_at({{1, 1}}), dirac_at({{0, 1}})}, {1, 1}, {1, 1});
}

}  // namespace polya::test
