#pragma once

#include "polya/rng.hpp"
#include "polya/urn.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polya {

struct UrnState {
  std::vector<std::int64_t> counts;
  std::uint64_t step = 0;
  /// No ball of positive activity is left; the process has stopped.
  bool extinct = false;

  friend bool operator==(const UrnState&, const UrnState&) = default;
};

/// Which factor's replacement law fired. Plain urns always report Whole.
enum class DrawSide : std::uint8_t { Whole, Left, Right };

struct Draw {
  ColourId colour = 0;
  /// Atom index within the measure that fired: the urn's own measure for
  /// Whole, the left or right factor's measure otherwise.
  std::size_t atom = 0;
  DrawSide side = DrawSide::Whole;

  friend bool operator==(const Draw&, const Draw&) = default;
};

struct SimulationTrace {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string rng_name;
  std::uint64_t stride = 1;
  /// Snapshots at step 0, every `stride` steps, and at the final step.
  std::vector<UrnState> states;
  /// One entry per step when draws are recorded.
  std::vector<Draw> draws;
  bool draws_recorded = false;
  /// Set for traces of a product sampled component by component.
  bool components_recorded = false;
  /// Right factor was a one-colour urn with the Dirac-at-0 law.
  bool right_factor_scalar = false;

  const UrnState& final_state() const { return states.back(); }
};

struct RunOptions {
  std::uint64_t stride = 1;
  bool record_draws = true;
};

/// Markov chain sampler for one urn, with the per-colour replacement tables
/// precomputed in double precision.
class Simulator {
 public:
  explicit Simulator(const PolyaUrn& urn);

  /// Samples left × right without merging the mixture: the factor whose law
  /// fires is drawn first (weights a_i : a'_j) and recorded in each Draw.
  /// The induced chain is that of product(left, right).
  static Simulator for_product(const PolyaUrn& left, const PolyaUrn& right);

  std::size_t colour_count() const { return activities_.size(); }
  UrnState initial_state() const;

  /// Advances one draw. Throws AlreadyExtinct.
  Draw step(UrnState& state, StreamRng& rng) const;

  /// Runs up to n_steps draws (fewer on extinction) on stream `stream` of `seed`.
  SimulationTrace run(std::uint64_t n_steps, std::uint64_t seed, std::uint64_t stream = 0,
                      const RunOptions& options = {}) const;

  /// Replica r uses stream r + 1. Replicas run on worker threads; the result
  /// does not depend on the thread count.
  std::vector<SimulationTrace> run_replicas(std::uint64_t n_steps, std::uint64_t seed,
                                            std::size_t replicas, const RunOptions& options = {},
                                            unsigned threads = 0) const;

 private:
  struct Outcome {
    double cumulative = 0.0;
    std::size_t atom = 0;
    DrawSide side = DrawSide::Whole;
    std::vector<std::pair<ColourId, std::int64_t>> delta;
  };

  Simulator() = default;
  bool extinct(const std::vector<std::int64_t>& counts) const;

  std::vector<double> activities_;
  std::vector<std::int64_t> initial_;
  std::vector<std::vector<Outcome>> outcomes_;
  bool components_ = false;
  bool right_scalar_ = false;
};

/// One step from `state` (convenience wrapper building a Simulator).
struct StepResult {
  UrnState state;
  Draw draw;
};
StepResult step(const PolyaUrn& urn, const UrnState& state, StreamRng& rng);

/// Convenience wrapper: Simulator(urn).run(n_steps, seed, 0, {stride, true}).
SimulationTrace run(const PolyaUrn& urn, std::uint64_t n_steps, std::uint64_t seed,
                    std::uint64_t snapshot_stride = 1);

/// Final counts divided by the final step. Throws ZeroSteps.
std::vector<double> normalized_composition(const SimulationTrace& trace);

struct SlowedEmbedding {
  /// tau[0] = 0; tau[k] = step of the k-th left-factor draw.
  std::vector<std::uint64_t> tau;
  std::vector<UrnState> states;
  /// States between consecutive tau values never changed.
  bool constant_between = false;
};

/// Subsamples a trace of u × scalar_urn(alpha) at the left-factor draws.
/// Needs component-recorded draws and stride 1; throws NotASlowedProduct.
SlowedEmbedding slowed_embedding(const SimulationTrace& trace);

}  // namespace polya
