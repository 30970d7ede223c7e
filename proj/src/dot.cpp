#include "recon/dot.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace recon {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string pair_label(const StatePair& p) { return std::to_string(p.lo) + "," + std::to_string(p.hi); }

}  // namespace

std::string to_dot(const WeightedPairGraph& g) {
  std::ostringstream out;
  out << "digraph wpg {\n";
  out << "  node [shape=circle];\n";
  for (const auto& p : g.vertices()) out << "  \"" << pair_label(p) << "\";\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (const auto& e : g.out_edges(v))
      out << "  \"" << pair_label(g.vertex(v)) << "\" -> \"" << pair_label(g.vertex(e.target)) << "\" [label=\""
          << join(e.weight) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ObserverDfa& dfa, const WeightedPairGraph& g) {
  std::ostringstream out;
  out << "digraph observer {\n";
  out << "  node [shape=box];\n";
  for (ObserverDfa::StateId s = 0; s < dfa.num_states(); ++s) {
    out << "  s" << s << " [label=\"";
    const auto& subset = dfa.subset(s);
    if (subset.empty()) out << "{}";
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "\\n" : "") << pair_label(g.vertex(subset[i]));
    out << '"';
    if (s == ObserverDfa::initial_state) out << ", style=bold";
    out << "];\n";
  }
  for (ObserverDfa::StateId s = 0; s < dfa.num_states(); ++s) {
    std::map<ObserverDfa::StateId, std::vector<std::size_t>> grouped;
    for (Input u = 1; u <= dfa.num_inputs(); ++u)
      if (auto t = dfa.transition(s, u)) grouped[*t].push_back(u);
    for (const auto& [t, inputs] : grouped)
      out << "  s" << s << " -> s" << t << " [label=\"" << join(inputs) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TransitionGraph& stg) {
  std::ostringstream out;
  out << "digraph stg {\n";
  out << "  node [shape=circle];\n";
  auto name = [&](State x) {
    return "\"" + std::to_string(x) + "/" + std::to_string(stg.vertices[x - 1].output) + "\"";
  };
  for (const auto& v : stg.vertices) out << "  " << name(v.state) << ";\n";
  for (const auto& e : stg.edges) out << "  " << name(e.from) << " -> " << name(e.to) << " [label=\"" << join(e.weight) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace recon
