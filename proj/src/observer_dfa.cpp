#include "recon/observer_dfa.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace recon {

ObserverDfa build_observer_dfa(const WeightedPairGraph& g) {
  const std::size_t m = g.num_inputs();
  ObserverDfa dfa;
  dfa.num_inputs_ = m;

  std::vector<VertexId> all(g.num_vertices());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  dfa.index_.emplace(all, 0);
  dfa.subsets_.push_back(std::move(all));

  // Layered worklist: `current` holds the states found in the previous round,
  // `next` the ones discovered in this round.
  std::vector<ObserverDfa::StateId> current{0};
  std::vector<std::vector<VertexId>> successors(m);
  while (!current.empty()) {
    std::vector<ObserverDfa::StateId> next;
    for (auto s : current) {
      for (auto& succ : successors) succ.clear();
      for (auto v : dfa.subsets_[s])
        for (const auto& e : g.out_edges(v))
          for (auto u : e.weight) successors[u - 1].push_back(e.target);

      for (std::size_t j = 0; j < m; ++j) {
        auto& succ = successors[j];
        ObserverDfa::StateId target = ObserverDfa::undefined;
        if (!succ.empty()) {
          std::sort(succ.begin(), succ.end());
          succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
          auto [it, inserted] = dfa.index_.try_emplace(succ, dfa.subsets_.size());
          if (inserted) {
            dfa.subsets_.push_back(succ);
            next.push_back(it->second);
          }
          target = it->second;
        }
        // Rows are appended lazily so delta_ always covers every stored state.
        dfa.delta_.resize(dfa.subsets_.size() * m, ObserverDfa::undefined);
        dfa.delta_[s * m + j] = target;
      }
    }
    current = std::move(next);
  }
  dfa.delta_.resize(dfa.subsets_.size() * m, ObserverDfa::undefined);
  return dfa;
}

std::size_t ObserverDfa::num_transitions() const {
  return static_cast<std::size_t>(std::count_if(delta_.begin(), delta_.end(), [](StateId t) { return t != undefined; }));
}

std::optional<ObserverDfa::StateId> ObserverDfa::find(std::span<const VertexId> subset) const {
  auto it = index_.find(std::vector<VertexId>(subset.begin(), subset.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ObserverDfa::StateId> ObserverDfa::transition(StateId s, Input u) const {
  if (s >= num_states()) throw std::out_of_range("ObserverDfa::transition: state out of range");
  if (u < 1 || u > num_inputs_) throw std::out_of_range("ObserverDfa::transition: input out of range");
  const StateId t = delta_[s * num_inputs_ + (u - 1)];
  if (t == undefined) return std::nullopt;
  return t;
}

bool ObserverDfa::is_complete() const {
  return std::none_of(delta_.begin(), delta_.end(), [](StateId t) { return t == undefined; });
}

bool ObserverDfa::accepts(std::span<const Input> word) const {
  if (subsets_[initial_state].empty()) return false;
  StateId s = initial_state;
  for (auto u : word) {
    auto t = transition(s, u);
    if (!t) return false;
    s = *t;
  }
  return true;
}

std::optional<InputWord> ObserverDfa::shortest_escaping_word() const {
  if (subsets_[initial_state].empty()) return InputWord{};
  // BFS in input order visits states in length-lexicographic order of their
  // access words, so the first missing transition met gives the answer.
  std::vector<StateId> parent(num_states(), undefined);
  std::vector<Input> via(num_states(), 0);
  std::vector<char> seen(num_states(), 0);
  std::deque<StateId> queue{initial_state};
  seen[initial_state] = 1;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (Input u = 1; u <= num_inputs_; ++u) {
      const StateId t = delta_[s * num_inputs_ + (u - 1)];
      if (t == undefined) {
        InputWord word{u};
        for (StateId c = s; c != initial_state; c = parent[c]) word.push_back(via[c]);
        std::reverse(word.begin(), word.end());
        return word;
      }
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = s;
        via[t] = u;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace recon
