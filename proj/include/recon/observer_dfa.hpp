#pragma once

// Observer DFA: subset construction over pair-graph vertices.
//
// The initial state is the full vertex set of the pair graph; the j-successor
// of a state s is the set of pair-graph vertices reachable from s by an edge
// whose weight contains j, and is left undefined when that set is empty.
// Every state is final, so a word is accepted iff the run never hits an
// undefined transition. Accepted words are exactly the input words that do
// not determine the current state; any rejected word is a homing sequence.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "recon/pair_graph.hpp"

namespace recon {

class ObserverDfa {
 public:
  using StateId = std::size_t;
  static constexpr StateId initial_state = 0;

  std::size_t num_states() const { return subsets_.size(); }
  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t num_transitions() const;

  /// Pair-graph vertex ids of state `s`, sorted.
  const std::vector<VertexId>& subset(StateId s) const { return subsets_.at(s); }
  std::optional<StateId> find(std::span<const VertexId> subset) const;

  /// sigma(s, u), or nullopt where it is undefined. u is 1-based.
  std::optional<StateId> transition(StateId s, Input u) const;

  /// Transitions are defined at every (state, input) pair.
  bool is_complete() const;

  /// The extended transition function is defined on `word` from the initial
  /// state (and, for the empty word, the initial state is nonempty).
  bool accepts(std::span<const Input> word) const;

  /// Length-lexicographically smallest rejected word, or nullopt if the DFA
  /// is complete. Inputs are tried in increasing order.
  std::optional<InputWord> shortest_escaping_word() const;

 private:
  friend ObserverDfa build_observer_dfa(const WeightedPairGraph& g);

  static constexpr StateId undefined = static_cast<StateId>(-1);

  std::size_t num_inputs_ = 0;
  std::vector<std::vector<VertexId>> subsets_;
  std::vector<StateId> delta_;  // num_states * num_inputs, row per state
  std::map<std::vector<VertexId>, StateId> index_;
};

ObserverDfa build_observer_dfa(const WeightedPairGraph& g);

}  // namespace recon
