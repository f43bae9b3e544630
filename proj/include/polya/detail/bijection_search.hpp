#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polya::detail {

/// Individualize-and-refine search for a structure-preserving bijection
/// between two n-element structures ("left" and "right").
///
/// `signature(side, index, classes)` must describe element `index` of the
/// given side in terms of isomorphism-invariant data and the current class
/// labels of the other elements of that side. Equal signatures get equal
/// class ids on both sides, so a refined colouring is a joint one.
/// `accept(forward)` performs the full verification of a candidate bijection
/// (left index -> right index); the search is exact as long as signatures are
/// invariant, however coarse.
template <class Signature, class Accept>
class BijectionSearch {
 public:
  BijectionSearch(std::size_t n, Signature signature, Accept accept)
      : n_(n), signature_(std::move(signature)), accept_(std::move(accept)) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<int> left(n_, 0), right(n_, 0);
    return search(std::move(left), std::move(right), 1);
  }

 private:
  // Returns the number of classes, or nullopt if the two sides disagree.
  std::optional<int> refine(std::vector<int>& left, std::vector<int>& right, int classes) {
    for (;;) {
      std::vector<std::string> sig_left(n_), sig_right(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        sig_left[i] = std::to_string(left[i]) + '#' + signature_(0, i, left);
        sig_right[i] = std::to_string(right[i]) + '#' + signature_(1, i, right);
      }
      std::map<std::string, int> ids;
      for (const auto& s : sig_left) ids.emplace(s, 0);
      for (const auto& s : sig_right) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      std::vector<int> count(next, 0);
      for (std::size_t i = 0; i < n_; ++i) {
        left[i] = ids[sig_left[i]];
        right[i] = ids[sig_right[i]];
        ++count[left[i]];
        --count[right[i]];
      }
      if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; }))
        return std::nullopt;
      if (next == classes) return next;
      classes = next;
    }
  }

  std::optional<std::vector<std::size_t>> search(std::vector<int> left, std::vector<int> right,
                                                 int classes) {
    auto refined = refine(left, right, classes);
    if (!refined) return std::nullopt;
    classes = *refined;
    if (static_cast<std::size_t>(classes) == n_) {
      std::vector<std::size_t> right_of(n_);
      for (std::size_t j = 0; j < n_; ++j) right_of[right[j]] = j;
      std::vector<std::size_t> forward(n_);
      for (std::size_t i = 0; i < n_; ++i) forward[i] = right_of[left[i]];
      if (accept_(forward)) return forward;
      return std::nullopt;
    }
    // Branch on the smallest non-singleton cell.
    std::vector<int> size(classes, 0);
    for (int c : left) ++size[c];
    int cell = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (cell < 0 || size[c] < size[cell])) cell = c;
    std::size_t pivot = 0;
    while (left[pivot] != cell) ++pivot;
    for (std::size_t w = 0; w < n_; ++w) {
      if (right[w] != cell) continue;
      auto l = left;
      auto r = right;
      l[pivot] = classes;
      r[w] = classes;
      if (auto found = search(std::move(l), std::move(r), classes + 1)) return found;
    }
    return std::nullopt;
  }

  std::size_t n_;
  Signature signature_;
  Accept accept_;
};

template <class Signature, class Accept>
std::optional<std::vector<std::size_t>> find_bijection(std::size_t n, Signature signature,
                                                       Accept accept) {
  return BijectionSearch<Signature, Accept>(n, std::move(signature), std::move(accept)).run();
}

}  // namespace polya::detail
