#pragma once

// Reconstructibility decisions, homing-sequence checks and current-state
// tracking.
//
// Two notions are decided:
//  - reconstructible: some input word (a homing sequence) lets the output
//    record determine the current state for every initial state. Decided by
//    the absence of a complete subgraph in the pair graph, or equivalently by
//    the observer DFA being incomplete.
//  - uniformly reconstructible: there is a horizon p such that every input
//    word of length p is homing. Decided by acyclicity of the pair graph.
//
// The oracle_* functions decide the same questions from raw trajectories,
// sharing no code with the pair graph or the observer DFA.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "recon/bcn.hpp"
#include "recon/pair_graph.hpp"

namespace recon {

enum class Method { wpg_complete_subgraph, observer_dfa, wpg_cycle };

std::string to_string(Method m);

/// Vertices of a complete subgraph of the pair graph.
struct CompleteSubgraphWitness {
  std::vector<StatePair> vertices;
};
/// A pair-graph cycle v_0 -> ... -> v_{k-1} -> v_0.
struct CycleWitness {
  std::vector<StatePair> cycle;
};
struct HomingWitness {
  InputWord word;
};
/// Every input word of length `horizon` is homing.
struct HorizonWitness {
  std::size_t horizon;
};

using Witness = std::variant<CompleteSubgraphWitness, CycleWitness, HomingWitness, HorizonWitness>;

struct ReconReport {
  bool reconstructible;
  Method method;
  Witness witness;
};

/// Complete-subgraph test on the pair graph. Witness: the maximal complete
/// subgraph when not reconstructible, the shortest homing word otherwise.
ReconReport is_reconstructible(const Bcn& bcn);

/// Completeness test on the observer DFA.
bool is_reconstructible_via_dfa(const Bcn& bcn);

/// Cycle test on the pair graph. Witness: a cycle, or the horizon
/// (longest path length + 1, or 0 for an empty pair graph).
ReconReport is_fornasini_reconstructible(const Bcn& bcn);

/// True iff every pair of distinct initial states that yields the same
/// output word under `inputs` ends in the same state.
bool verify_homing(const Bcn& bcn, std::span<const Input> inputs);

struct TrackingTrace {
  std::vector<std::vector<State>> candidates;  // X_0 ... X_p, each sorted
  State final_state;
};

class TrackingError : public std::runtime_error {
 public:
  enum class Kind { length_mismatch, no_consistent_state, not_homing };

  TrackingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// States x with H x = y.
std::vector<State> output_preimage(const Bcn& bcn, Output y);

/// Runs the candidate-set filter X_0 = H^-1(y_0),
/// X_{i+1} = { step(x, u_i) | x in X_i, output(step(x, u_i)) = y_{i+1} }
/// and returns the unique element of X_p.
///
/// Throws TrackingError if |outputs| != |inputs| + 1, if some X_i is empty
/// ("no consistent state"), or if X_p has more than one element.
TrackingTrace determine_current_state(const Bcn& bcn, std::span<const Input> inputs,
                                      std::span<const Output> outputs);

/// Exhaustive check of the homing-sequence definition. Explores input words
/// breadth first, tracking the set of still-confusable state pairs computed
/// directly from trajectories; intended for small N.
bool oracle_reconstructible(const Bcn& bcn);

/// Exhaustive check of uniform reconstructibility: looks for an
/// output-equal walk of distinct state pairs of length (N^2 - N) / 2 under
/// common inputs, which exists iff an infinite one does.
bool oracle_fornasini(const Bcn& bcn);

}  // namespace recon
