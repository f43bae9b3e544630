#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace polya {

/// Seedable 64-bit generator with explicit stream splitting. The algorithm
/// identity (kName) is part of the reproducibility contract and is written
/// into trace metadata; changing the derivation below requires a new name.
///
/// Stream (seed, s) seeds std::mt19937_64 through std::seed_seq over the
/// 32-bit halves of seed and s plus a version word. Replica r of a run uses
/// stream r + 1; stream 0 is the root stream.
class StreamRng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kName = "mt19937_64/seed_seq/v1";

  explicit StreamRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  /// Independent stream `s` of the same root seed.
  StreamRng child(std::uint64_t s) const { return StreamRng(seed_, s); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, n); n > 0. Unbiased (rejection).
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

inline StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    std::uint32_t{0x706f6c31}};
  engine_.seed(seq);
}

inline std::uint64_t StreamRng::below(std::uint64_t n) {
  const std::uint64_t limit = max() - max() % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

}  // namespace polya
