#include "polya/simulator.hpp"

#include "polya/algebra.hpp"
#include "polya/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace polya {

namespace {

template <class Outcome>
void finish_cumulative(std::vector<Outcome>& outcomes) {
  double running = 0.0;
  for (auto& o : outcomes) {
    running += o.cumulative;
    o.cumulative = running;
  }
  if (!outcomes.empty()) outcomes.back().cumulative = 1.0;
}

}  // namespace

Simulator::Simulator(const PolyaUrn& urn) {
  const std::size_t q = urn.colour_count();
  initial_ = urn.initial();
  outcomes_.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    activities_.push_back(to_double(urn.activity(i)));
    const auto& atoms = urn.measure(i).atoms();
    for (std::size_t k = 0; k < atoms.size(); ++k)
      outcomes_[i].push_back({to_double(atoms[k].prob), k, DrawSide::Whole, atoms[k].delta.entries()});
    finish_cumulative(outcomes_[i]);
  }
}

Simulator Simulator::for_product(const PolyaUrn& left, const PolyaUrn& right) {
  Simulator sim;
  const ProductColourIndexing idx{left.colour_count(), right.colour_count()};
  const PolyaUrn merged = product(left, right);
  sim.initial_ = merged.initial();
  sim.components_ = true;
  sim.right_scalar_ = right.colour_count() == 1 && right.measure(0).is_dirac_zero();
  sim.outcomes_.resize(idx.size());
  std::vector<ColourId> kappa_left(idx.q), kappa_right(idx.q_prime);
  for (std::size_t i = 0; i < idx.q; ++i) {
    for (std::size_t j = 0; j < idx.q_prime; ++j) {
      const std::size_t c = idx.flat(i, j);
      const Rational total = left.activity(i) + right.activity(j);
      sim.activities_.push_back(to_double(total));
      auto& out = sim.outcomes_[c];
      if (total == 0) {
        out.push_back({1.0, 0, DrawSide::Whole, {}});
        continue;
      }
      for (std::size_t k = 0; k < idx.q; ++k) kappa_left[k] = idx.flat(k, j);
      for (std::size_t k = 0; k < idx.q_prime; ++k) kappa_right[k] = idx.flat(i, k);
      const double w_left = to_double(left.activity(i) / total);
      const double w_right = to_double(right.activity(j) / total);
      if (left.activity(i) > 0) {
        const auto& atoms = left.measure(i).atoms();
        for (std::size_t k = 0; k < atoms.size(); ++k)
          out.push_back({w_left * to_double(atoms[k].prob), k, DrawSide::Left,
                         atoms[k].delta.relabel(kappa_left).entries()});
      }
      if (right.activity(j) > 0) {
        const auto& atoms = right.measure(j).atoms();
        for (std::size_t k = 0; k < atoms.size(); ++k)
          out.push_back({w_right * to_double(atoms[k].prob), k, DrawSide::Right,
                         atoms[k].delta.relabel(kappa_right).entries()});
      }
      finish_cumulative(out);
    }
  }
  return sim;
}

bool Simulator::extinct(const std::vector<std::int64_t>& counts) const {
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (activities_[i] > 0 && counts[i] > 0) return false;
  return true;
}

UrnState Simulator::initial_state() const {
  UrnState s{initial_, 0, false};
  s.extinct = extinct(s.counts);
  return s;
}

Draw Simulator::step(UrnState& state, StreamRng& rng) const {
  if (state.extinct) throw Error(ErrorKind::AlreadyExtinct, "the urn is essentially extinct");
  const std::size_t q = activities_.size();
  double total = 0.0;
  for (std::size_t i = 0; i < q; ++i) total += activities_[i] * static_cast<double>(state.counts[i]);

  // Colour i with probability a_i X_i / <a, X>; fall back to the last
  // colour with positive weight against rounding at the top end.
  const double target = rng.uniform() * total;
  double running = 0.0;
  std::size_t colour = q;
  for (std::size_t i = 0; i < q; ++i) {
    const double w = activities_[i] * static_cast<double>(state.counts[i]);
    if (w <= 0) continue;
    running += w;
    colour = i;
    if (target < running) break;
  }

  const auto& outcomes = outcomes_[colour];
  const double u = rng.uniform();
  std::size_t pick = 0;
  while (pick + 1 < outcomes.size() && !(u < outcomes[pick].cumulative)) ++pick;
  const Outcome& o = outcomes[pick];
  for (const auto& [j, x] : o.delta) state.counts[j] += x;
  ++state.step;
  state.extinct = extinct(state.counts);
  return Draw{colour, o.atom, o.side};
}

SimulationTrace Simulator::run(std::uint64_t n_steps, std::uint64_t seed, std::uint64_t stream,
                               const RunOptions& options) const {
  if (options.stride == 0) throw Error(ErrorKind::InvalidArgument, "snapshot stride must be positive");
  StreamRng rng(seed, stream);
  SimulationTrace trace;
  trace.seed = seed;
  trace.stream = stream;
  trace.rng_name = std::string(StreamRng::kName);
  trace.stride = options.stride;
  trace.draws_recorded = options.record_draws;
  trace.components_recorded = components_;
  trace.right_factor_scalar = right_scalar_;

  UrnState state = initial_state();
  trace.states.push_back(state);
  if (options.record_draws) trace.draws.reserve(n_steps);
  while (state.step < n_steps && !state.extinct) {
    const Draw d = step(state, rng);
    if (options.record_draws) trace.draws.push_back(d);
    if (state.step % options.stride == 0) trace.states.push_back(state);
  }
  if (trace.states.back().step != state.step) trace.states.push_back(state);
  return trace;
}

std::vector<SimulationTrace> Simulator::run_replicas(std::uint64_t n_steps, std::uint64_t seed,
                                                     std::size_t replicas,
                                                     const RunOptions& options,
                                                     unsigned threads) const {
  std::vector<SimulationTrace> traces(replicas);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(replicas, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < replicas; r = next++)
      traces[r] = run(n_steps, seed, r + 1, options);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return traces;
}

StepResult step(const PolyaUrn& urn, const UrnState& state, StreamRng& rng) {
  StepResult result{state, {}};
  result.draw = Simulator(urn).step(result.state, rng);
  return result;
}

SimulationTrace run(const PolyaUrn& urn, std::uint64_t n_steps, std::uint64_t seed,
                    std::uint64_t snapshot_stride) {
  return Simulator(urn).run(n_steps, seed, 0, RunOptions{snapshot_stride, true});
}

std::vector<double> normalized_composition(const SimulationTrace& trace) {
  if (trace.states.empty() || trace.final_state().step == 0)
    throw Error(ErrorKind::ZeroSteps, "no draws were made");
  const UrnState& last = trace.final_state();
  std::vector<double> out;
  for (std::int64_t c : last.counts)
    out.push_back(static_cast<double>(c) / static_cast<double>(last.step));
  return out;
}

SlowedEmbedding slowed_embedding(const SimulationTrace& trace) {
  if (!trace.components_recorded || !trace.right_factor_scalar)
    throw Error(ErrorKind::NotASlowedProduct,
                "trace is not of a product with a one-colour Dirac-at-0 right factor");
  if (!trace.draws_recorded || trace.stride != 1 || trace.states.size() != trace.draws.size() + 1)
    throw Error(ErrorKind::NotASlowedProduct, "trace needs every state and the full draw log");
  SlowedEmbedding out;
  out.tau.push_back(0);
  out.states.push_back(trace.states.front());
  out.constant_between = true;
  for (std::size_t n = 1; n < trace.states.size(); ++n) {
    if (trace.draws[n - 1].side == DrawSide::Left) {
      out.tau.push_back(n);
      out.states.push_back(trace.states[n]);
    } else if (trace.states[n].counts != trace.states[n - 1].counts) {
      out.constant_between = false;
    }
  }
  return out;
}

}  // namespace polya
