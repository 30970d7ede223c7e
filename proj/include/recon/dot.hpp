#pragma once

// Deterministic Graphviz renderings. Output depends only on the structure,
// so it is stable across runs and suitable for golden-file comparison.

#include <string>

#include "recon/bcn.hpp"
#include "recon/observer_dfa.hpp"
#include "recon/pair_graph.hpp"

namespace recon {

/// Nodes "lo,hi"; edge labels are the sorted weight inputs, comma-joined.
std::string to_dot(const WeightedPairGraph& g);

/// Nodes s0 (initial, bold), s1, ... labelled with their pairs one per line;
/// parallel transitions are merged into one edge with a comma-joined label.
std::string to_dot(const ObserverDfa& dfa, const WeightedPairGraph& g);

/// Nodes "x/y"; edge labels are the sorted inputs, comma-joined.
std::string to_dot(const TransitionGraph& stg);

}  // namespace recon
