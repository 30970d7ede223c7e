#include "recon/decider.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "recon/observer_dfa.hpp"

namespace recon {

std::string to_string(Method m) {
  switch (m) {
    case Method::wpg_complete_subgraph: return "wpg-complete-subgraph";
    case Method::observer_dfa: return "observer-dfa";
    case Method::wpg_cycle: return "wpg-cycle";
  }
  return "unknown";
}

namespace {

std::vector<StatePair> to_pairs(const WeightedPairGraph& g, const std::vector<VertexId>& ids) {
  std::vector<StatePair> pairs;
  pairs.reserve(ids.size());
  for (auto v : ids) pairs.push_back(g.vertex(v));
  return pairs;
}

}  // namespace

ReconReport is_reconstructible(const Bcn& bcn) {
  const auto g = build_wpg(bcn);
  if (auto witness = complete_subgraph(g))
    return {false, Method::wpg_complete_subgraph, CompleteSubgraphWitness{to_pairs(g, *witness)}};
  auto word = build_observer_dfa(g).shortest_escaping_word();
  if (!word) throw std::logic_error("is_reconstructible: observer DFA complete without a complete subgraph");
  return {true, Method::wpg_complete_subgraph, HomingWitness{std::move(*word)}};
}

bool is_reconstructible_via_dfa(const Bcn& bcn) { return !build_observer_dfa(build_wpg(bcn)).is_complete(); }

ReconReport is_fornasini_reconstructible(const Bcn& bcn) {
  const auto g = build_wpg(bcn);
  if (auto cycle = find_cycle(g)) return {false, Method::wpg_cycle, CycleWitness{to_pairs(g, *cycle)}};
  const std::size_t horizon = g.empty() ? 0 : longest_path_length(g) + 1;
  return {true, Method::wpg_cycle, HorizonWitness{horizon}};
}

bool verify_homing(const Bcn& bcn, std::span<const Input> inputs) {
  const std::size_t n = bcn.num_states();
  std::vector<StateWord> states(n);
  std::vector<OutputWord> outputs(n);
  for (State x = 1; x <= n; ++x) {
    states[x - 1] = state_trajectory(bcn, x, inputs);
    outputs[x - 1] = output_trajectory(bcn, x, inputs);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (outputs[a] == outputs[b] && states[a].back() != states[b].back()) return false;
  return true;
}

std::vector<State> output_preimage(const Bcn& bcn, Output y) {
  if (y < 1 || y > bcn.num_outputs()) throw std::out_of_range("output " + std::to_string(y) + " out of range");
  // H is logical, so H^T y selects the columns of H equal to delta_Q^y.
  std::vector<State> xs;
  const auto cols = bcn.output_matrix().col_index();
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == y) xs.push_back(i + 1);
  return xs;
}

TrackingTrace determine_current_state(const Bcn& bcn, std::span<const Input> inputs,
                                      std::span<const Output> outputs) {
  if (outputs.size() != inputs.size() + 1) {
    std::ostringstream msg;
    msg << "output record has length " << outputs.size() << ", expected " << inputs.size() + 1;
    throw TrackingError(TrackingError::Kind::length_mismatch, msg.str());
  }
  for (auto u : inputs)
    if (u < 1 || u > bcn.num_inputs()) throw std::out_of_range("input " + std::to_string(u) + " out of range");

  TrackingTrace trace;
  trace.candidates.push_back(output_preimage(bcn, outputs[0]));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (outputs[i + 1] < 1 || outputs[i + 1] > bcn.num_outputs())
      throw std::out_of_range("output " + std::to_string(outputs[i + 1]) + " out of range");
    std::vector<State> next;
    for (auto x : trace.candidates.back()) {
      const State x1 = bcn.step(x, inputs[i]);
      if (bcn.output(x1) == outputs[i + 1]) next.push_back(x1);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    trace.candidates.push_back(std::move(next));
  }

  for (std::size_t i = 0; i < trace.candidates.size(); ++i)
    if (trace.candidates[i].empty())
      throw TrackingError(TrackingError::Kind::no_consistent_state,
                          "no consistent state (candidate set X_" + std::to_string(i) + " is empty)");
  const auto& last = trace.candidates.back();
  if (last.size() > 1)
    throw TrackingError(TrackingError::Kind::not_homing,
                        "input word not homing for this output: " + std::to_string(last.size()) +
                            " candidate states remain");
  trace.final_state = last.front();
  return trace;
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

using RawPair = std::pair<State, State>;
using PairSet = std::set<RawPair>;

// End pairs {x_p, x'_p} of all trajectory pairs from distinct initial states
// that agree on every output under `word` and end in distinct states.
PairSet confusable_pairs(const Bcn& bcn, const InputWord& word) {
  PairSet result;
  const std::size_t n = bcn.num_states();
  for (State a = 1; a <= n; ++a)
    for (State b = a + 1; b <= n; ++b) {
      State xa = a, xb = b;
      bool same = bcn.output(xa) == bcn.output(xb);
      for (std::size_t t = 0; same && t < word.size(); ++t) {
        xa = bcn.step(xa, word[t]);
        xb = bcn.step(xb, word[t]);
        same = bcn.output(xa) == bcn.output(xb);
      }
      if (same && xa != xb) result.insert(std::minmax(xa, xb));
    }
  return result;
}

}  // namespace

bool oracle_reconstructible(const Bcn& bcn) {
  // P(w u) is a function of P(w) and u, so a word whose pair set was already
  // seen need not be extended again. The pair-set space is finite.
  std::set<PairSet> seen;
  std::deque<InputWord> queue;
  auto visit = [&](InputWord w) {
    auto p = confusable_pairs(bcn, w);
    if (p.empty()) return true;
    if (seen.insert(std::move(p)).second) queue.push_back(std::move(w));
    return false;
  };
  if (visit({})) return true;
  while (!queue.empty()) {
    InputWord w = std::move(queue.front());
    queue.pop_front();
    for (Input u = 1; u <= bcn.num_inputs(); ++u) {
      InputWord next = w;
      next.push_back(u);
      if (visit(std::move(next))) return true;
    }
  }
  return false;
}

bool oracle_fornasini(const Bcn& bcn) {
  const std::size_t n = bcn.num_states();
  const std::size_t horizon = (n * n - n) / 2;
  auto at = [n](State a, State b) { return (a - 1) * n + (b - 1); };

  // alive[a,b]: an output-equal walk of distinct pairs of the current length
  // starts at {a, b}.
  std::vector<char> alive(n * n, 0);
  bool any = false;
  for (State a = 1; a <= n; ++a)
    for (State b = a + 1; b <= n; ++b)
      if (bcn.output(a) == bcn.output(b)) alive[at(a, b)] = 1, any = true;

  for (std::size_t len = 0; any && len < horizon; ++len) {
    std::vector<char> next(n * n, 0);
    any = false;
    for (State a = 1; a <= n; ++a)
      for (State b = a + 1; b <= n; ++b) {
        if (bcn.output(a) != bcn.output(b)) continue;
        for (Input u = 1; u <= bcn.num_inputs(); ++u) {
          const State sa = bcn.step(a, u);
          const State sb = bcn.step(b, u);
          const State c = std::min(sa, sb), d = std::max(sa, sb);
          if (c != d && alive[at(c, d)]) {
            next[at(a, b)] = 1;
            any = true;
            break;
          }
        }
      }
    alive = std::move(next);
  }
  return !any;
}

}  // namespace recon
