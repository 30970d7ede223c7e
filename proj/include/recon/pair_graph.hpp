#pragma once

// Weighted pair graph of a BCN.
//
// Vertices are the unordered pairs {x, x'} of distinct states with equal
// output. There is an edge {x1,x1'} -> {x2,x2'} weighted by every input u
// that maps the first pair onto the second (in either orientation). Since
// each input sends a pair to at most one pair, weights of distinct out-edges
// of a vertex are disjoint, and the outdegree of a vertex (the size of the
// union of its out-edge weights) is at most M.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "recon/bcn.hpp"

namespace recon {

struct StatePair {
  State lo;
  State hi;

  /// Canonical pair {a, b}; throws std::invalid_argument if a == b.
  static StatePair of(State a, State b);

  friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

using VertexId = std::size_t;
using InputSet = std::vector<Input>;  // strictly increasing

class WeightedPairGraph {
 public:
  struct Edge {
    VertexId target;
    InputSet weight;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  WeightedPairGraph(std::size_t num_inputs, std::vector<StatePair> vertices,
                    std::vector<std::vector<Edge>> out_edges);

  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return vertices_.empty(); }

  /// Vertices in increasing (lo, hi) order; VertexId is the position here.
  const std::vector<StatePair>& vertices() const { return vertices_; }
  const StatePair& vertex(VertexId v) const { return vertices_.at(v); }
  std::optional<VertexId> find(StatePair p) const;

  /// Out-edges of `v`, ordered by target id.
  std::span<const Edge> out_edges(VertexId v) const { return out_.at(v); }

  /// Weight of the edge v -> w, or nullptr if there is none.
  const InputSet* weight(VertexId v, VertexId w) const;

  std::size_t outdegree(VertexId v) const;
  /// Throws std::invalid_argument if `p` is not a vertex.
  std::size_t outdegree(StatePair p) const;

 private:
  std::size_t num_inputs_;
  std::vector<StatePair> vertices_;
  std::vector<std::vector<Edge>> out_;
};

WeightedPairGraph build_wpg(const Bcn& bcn);

/// True iff weights of distinct out-edges are pairwise disjoint at every
/// vertex and every weight is a nonempty strictly increasing subset of [1, M].
bool weights_disjoint(const WeightedPairGraph& g);

/// Vertices that have outdegree < M or can reach such a vertex, sorted.
std::vector<VertexId> doomed_set(const WeightedPairGraph& g);

/// The complement of doomed_set, if nonempty. Every vertex of it has
/// outdegree M inside the induced subgraph.
std::optional<std::vector<VertexId>> complete_subgraph(const WeightedPairGraph& g);
bool has_complete_subgraph(const WeightedPairGraph& g);

/// Outdegree of `v` counting only edges into `subset` (sorted ids).
std::size_t outdegree_within(const WeightedPairGraph& g, VertexId v, std::span<const VertexId> subset);

/// True iff every vertex of `subset` has outdegree M inside it and the
/// subset is nonempty.
bool is_complete_subgraph(const WeightedPairGraph& g, std::span<const VertexId> subset);

/// A directed cycle v_0 -> v_1 -> ... -> v_{k-1} -> v_0 (k = 1 for a
/// self-loop), found by depth-first search in vertex and edge order.
std::optional<std::vector<VertexId>> find_cycle(const WeightedPairGraph& g);
bool has_cycle(const WeightedPairGraph& g);

/// Number of edges on a longest path. Throws std::logic_error if the graph
/// has a cycle. 0 for a graph without edges.
std::size_t longest_path_length(const WeightedPairGraph& g);

/// Throws std::invalid_argument on an empty graph.
bool is_strongly_connected(const WeightedPairGraph& g);

}  // namespace recon
