#include "recon/pair_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>

namespace recon {

StatePair StatePair::of(State a, State b) {
  if (a == b) throw std::invalid_argument("StatePair: states must differ");
  return a < b ? StatePair{a, b} : StatePair{b, a};
}

WeightedPairGraph::WeightedPairGraph(std::size_t num_inputs, std::vector<StatePair> vertices,
                                     std::vector<std::vector<Edge>> out_edges)
    : num_inputs_(num_inputs), vertices_(std::move(vertices)), out_(std::move(out_edges)) {
  if (out_.size() != vertices_.size()) throw std::invalid_argument("WeightedPairGraph: adjacency size mismatch");
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("WeightedPairGraph: vertices must be strictly increasing");
  for (auto& edges : out_) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.target < b.target; });
    for (const auto& e : edges)
      if (e.target >= vertices_.size()) throw std::invalid_argument("WeightedPairGraph: edge target out of range");
  }
}

std::size_t WeightedPairGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& edges : out_) n += edges.size();
  return n;
}

std::optional<VertexId> WeightedPairGraph::find(StatePair p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

const InputSet* WeightedPairGraph::weight(VertexId v, VertexId w) const {
  for (const auto& e : out_.at(v))
    if (e.target == w) return &e.weight;
  return nullptr;
}

std::size_t WeightedPairGraph::outdegree(VertexId v) const {
  // Weights are disjoint, so the size of their union is the sum of sizes.
  std::size_t d = 0;
  for (const auto& e : out_.at(v)) d += e.weight.size();
  return d;
}

std::size_t WeightedPairGraph::outdegree(StatePair p) const {
  auto v = find(p);
  if (!v)
    throw std::invalid_argument("outdegree: {" + std::to_string(p.lo) + "," + std::to_string(p.hi) +
                                "} is not a vertex");
  return outdegree(*v);
}

WeightedPairGraph build_wpg(const Bcn& bcn) {
  const std::size_t n = bcn.num_states();
  const std::size_t m = bcn.num_inputs();

  std::vector<StatePair> vertices;
  for (State a = 1; a <= n; ++a)
    for (State b = a + 1; b <= n; ++b)
      if (bcn.output(a) == bcn.output(b)) vertices.push_back({a, b});

  auto index_of = [&](StatePair p) -> VertexId {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    assert(it != vertices.end() && *it == p);
    return static_cast<VertexId>(it - vertices.begin());
  };

  std::vector<std::vector<WeightedPairGraph::Edge>> out(vertices.size());
  for (VertexId v = 0; v < vertices.size(); ++v) {
    std::map<VertexId, InputSet> targets;
    for (Input u = 1; u <= m; ++u) {
      const State a = bcn.step(vertices[v].lo, u);
      const State b = bcn.step(vertices[v].hi, u);
      if (a == b || bcn.output(a) != bcn.output(b)) continue;
      targets[index_of(StatePair::of(a, b))].push_back(u);
    }
    for (auto& [w, weight] : targets) out[v].push_back({w, std::move(weight)});
  }

  WeightedPairGraph g(m, std::move(vertices), std::move(out));
  if (!weights_disjoint(g)) throw std::logic_error("build_wpg: out-edge weights overlap");
  return g;
}

bool weights_disjoint(const WeightedPairGraph& g) {
  const std::size_t m = g.num_inputs();
  std::vector<char> seen(m + 1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& e : g.out_edges(v)) {
      if (e.weight.empty()) return false;
      Input prev = 0;
      for (auto u : e.weight) {
        if (u <= prev || u > m || seen[u]) return false;
        seen[u] = 1;
        prev = u;
      }
    }
  }
  return true;
}

std::vector<VertexId> doomed_set(const WeightedPairGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> parents(n);
  for (VertexId v = 0; v < n; ++v)
    for (const auto& e : g.out_edges(v)) parents[e.target].push_back(v);

  std::vector<char> doomed(n, 0);
  std::vector<VertexId> frontier;
  for (VertexId v = 0; v < n; ++v)
    if (g.outdegree(v) < g.num_inputs()) {
      doomed[v] = 1;
      frontier.push_back(v);
    }
  while (!frontier.empty()) {
    const VertexId v = frontier.back();
    frontier.pop_back();
    for (auto p : parents[v])
      if (!doomed[p]) {
        doomed[p] = 1;
        frontier.push_back(p);
      }
  }

  std::vector<VertexId> result;
  for (VertexId v = 0; v < n; ++v)
    if (doomed[v]) result.push_back(v);
  return result;
}

std::optional<std::vector<VertexId>> complete_subgraph(const WeightedPairGraph& g) {
  const auto doomed = doomed_set(g);
  if (doomed.size() == g.num_vertices()) return std::nullopt;
  std::vector<VertexId> rest;
  auto it = doomed.begin();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (it != doomed.end() && *it == v) {
      ++it;
      continue;
    }
    rest.push_back(v);
  }
  return rest;
}

bool has_complete_subgraph(const WeightedPairGraph& g) { return complete_subgraph(g).has_value(); }

std::size_t outdegree_within(const WeightedPairGraph& g, VertexId v, std::span<const VertexId> subset) {
  std::size_t d = 0;
  for (const auto& e : g.out_edges(v))
    if (std::binary_search(subset.begin(), subset.end(), e.target)) d += e.weight.size();
  return d;
}

bool is_complete_subgraph(const WeightedPairGraph& g, std::span<const VertexId> subset) {
  if (subset.empty()) return false;
  return std::all_of(subset.begin(), subset.end(),
                     [&](VertexId v) { return outdegree_within(g, v, subset) == g.num_inputs(); });
}

std::optional<std::vector<VertexId>> find_cycle(const WeightedPairGraph& g) {
  enum : char { white, grey, black };
  const std::size_t n = g.num_vertices();
  std::vector<char> color(n, white);
  // Explicit stack of (vertex, next edge position); the grey vertices on it
  // form the current DFS path.
  std::vector<std::pair<VertexId, std::size_t>> stack;

  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != white) continue;
    stack.push_back({root, 0});
    color[root] = grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      const auto edges = g.out_edges(v);
      if (pos == edges.size()) {
        color[v] = black;
        stack.pop_back();
        continue;
      }
      const VertexId w = edges[pos++].target;
      if (color[w] == grey) {
        std::vector<VertexId> cycle;
        auto it = std::find_if(stack.begin(), stack.end(), [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) cycle.push_back(it->first);
        return cycle;
      }
      if (color[w] == white) {
        color[w] = grey;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

bool has_cycle(const WeightedPairGraph& g) { return find_cycle(g).has_value(); }

std::size_t longest_path_length(const WeightedPairGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (const auto& e : g.out_edges(v)) ++indeg[e.target];

  // Kahn's algorithm; depth[v] is the longest path ending in v.
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<std::size_t> depth(n, 0);
  std::size_t longest = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    longest = std::max(longest, depth[v]);
    for (const auto& e : g.out_edges(v)) {
      depth[e.target] = std::max(depth[e.target], depth[v] + 1);
      if (--indeg[e.target] == 0) queue.push_back(e.target);
    }
  }
  if (queue.size() != n) throw std::logic_error("longest_path_length: graph has a cycle");
  return longest;
}

namespace {

std::size_t count_reachable(std::size_t n, VertexId from, const std::vector<std::vector<VertexId>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const WeightedPairGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("is_strongly_connected: empty graph");
  std::vector<std::vector<VertexId>> fwd(n), rev(n);
  for (VertexId v = 0; v < n; ++v)
    for (const auto& e : g.out_edges(v)) {
      fwd[v].push_back(e.target);
      rev[e.target].push_back(v);
    }
  return count_reachable(n, 0, fwd) == n && count_reachable(n, 0, rev) == n;
}

}  // namespace recon
