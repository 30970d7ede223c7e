#include "recon/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "recon/decider.hpp"
#include "recon/dot.hpp"
#include "recon/generators.hpp"
#include "recon/network_io.hpp"
#include "recon/observer_dfa.hpp"
#include "recon/pair_graph.hpp"

namespace recon {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bcn load_network(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return parse_network(buf.str());
}

std::vector<std::size_t> parse_word(const std::string& text, const char* what) {
  std::istringstream in(text);
  std::vector<std::size_t> word;
  std::string token;
  while (in >> token) {
    std::size_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-')
      throw UsageError(std::string(what) + ": '" + token + "' is not a positive index");
    word.push_back(value);
  }
  return word;
}

std::string format_word(const std::vector<std::size_t>& word) {
  if (word.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + std::to_string(word[i]);
  return s;
}

std::string format_pair(const StatePair& p) { return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}"; }

std::string format_set(const std::vector<State>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t parse_count(const std::string& text, const char* what) {
  auto word = parse_word(text, what);
  if (word.size() != 1) throw UsageError(std::string(what) + " must be a single non-negative integer");
  return word[0];
}

Bcn generate(const std::vector<std::string>& params) {
  if (params.empty()) throw UsageError("gen: missing family");
  const auto& family = params[0];
  auto expect = [&](std::size_t count, const char* usage) {
    if (params.size() != count + 1) throw UsageError(std::string("usage: gen ") + usage);
  };
  if (family == "example5") {
    expect(0, "example5");
    return example_5state();
  }
  if (family == "cycle-stayer" || family == "stay-stepper") {
    expect(1, (family + " N").c_str());
    const auto n = parse_count(params[1], "N");
    if (n < 3) throw UsageError(family + ": N must be at least 3");
    return family == "cycle-stayer" ? family_cycle_stayer(n) : family_stay_stepper(n);
  }
  if (family == "sat") {
    expect(2, "sat n g-bits");
    const auto n = parse_count(params[1], "n");
    if (n < 2 || n > 16) throw UsageError("sat: n must be in 2..16");
    if (params[2].size() != (std::size_t{1} << (n - 1)))
      throw UsageError("sat: g-bits must have 2^(n-1) = " + std::to_string(std::size_t{1} << (n - 1)) +
                       " characters");
    try {
      return sat_reduction_bn(truth_table_from_bits(params[2]));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("sat: ") + e.what());
    }
  }
  if (family == "random") {
    expect(4, "random N M Q seed");
    const auto n = parse_count(params[1], "N");
    const auto m = parse_count(params[2], "M");
    const auto q = parse_count(params[3], "Q");
    const auto seed = parse_count(params[4], "seed");
    if (n < 1 || m < 1 || q < 1) throw UsageError("random: N, M, Q must be positive");
    return random_bcn(n, m, q, seed);
  }
  throw UsageError("gen: unknown family '" + family +
                   "' (expected example5, cycle-stayer, stay-stepper, sat, random)");
}

int analyze(const Bcn& bcn, std::ostream& out) {
  const auto g = build_wpg(bcn);
  const auto dfa = build_observer_dfa(g);
  out << "network: " << bcn.num_states() << " states, " << bcn.num_inputs() << " inputs, " << bcn.num_outputs()
      << " outputs\n";
  out << "pair-graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  out << "observer-dfa: " << dfa.num_states() << " states, " << dfa.num_transitions() << " transitions\n";

  const auto recon = is_reconstructible(bcn);
  out << "reconstructible: " << yes_no(recon.reconstructible) << '\n';
  if (auto* h = std::get_if<HomingWitness>(&recon.witness)) out << "homing-sequence: " << format_word(h->word) << '\n';
  if (auto* c = std::get_if<CompleteSubgraphWitness>(&recon.witness)) {
    out << "complete-subgraph:";
    for (const auto& p : c->vertices) out << ' ' << format_pair(p);
    out << '\n';
  }

  const auto uniform = is_fornasini_reconstructible(bcn);
  out << "uniformly-reconstructible: " << yes_no(uniform.reconstructible) << '\n';
  if (auto* h = std::get_if<HorizonWitness>(&uniform.witness)) out << "horizon: " << h->horizon << '\n';
  if (auto* c = std::get_if<CycleWitness>(&uniform.witness)) {
    out << "cycle:";
    for (const auto& p : c->cycle) out << ' ' << format_pair(p) << " ->";
    out << ' ' << format_pair(c->cycle.front()) << '\n';
  }
  return recon.reconstructible ? exit_ok : exit_negative;
}

int oracle_check(const Bcn& bcn, std::ostream& out) {
  const bool fast = is_reconstructible(bcn).reconstructible;
  const bool via_dfa = is_reconstructible_via_dfa(bcn);
  const bool oracle = oracle_reconstructible(bcn);
  const bool uniform = is_fornasini_reconstructible(bcn).reconstructible;
  const bool uniform_oracle = oracle_fornasini(bcn);
  out << "reconstructible (pair graph): " << yes_no(fast) << '\n';
  out << "reconstructible (observer dfa): " << yes_no(via_dfa) << '\n';
  out << "reconstructible (oracle): " << yes_no(oracle) << '\n';
  out << "uniformly-reconstructible (pair graph): " << yes_no(uniform) << '\n';
  out << "uniformly-reconstructible (oracle): " << yes_no(uniform_oracle) << '\n';
  const bool agree = fast == via_dfa && via_dfa == oracle && uniform == uniform_oracle;
  out << "agreement: " << yes_no(agree) << '\n';
  return agree ? exit_ok : exit_negative;
}

int track(const Bcn& bcn, const std::string& inputs, const std::string& outputs, std::ostream& out,
          std::ostream& err) {
  const auto u = parse_word(inputs, "--inputs");
  const auto y = parse_word(outputs, "--outputs");
  try {
    const auto trace = determine_current_state(bcn, u, y);
    for (std::size_t i = 0; i < trace.candidates.size(); ++i)
      out << "X" << i << ": " << format_set(trace.candidates[i]) << '\n';
    out << "current state: " << trace.final_state << '\n';
    return exit_ok;
  } catch (const TrackingError& e) {
    err << "error: " << e.what() << '\n';
    return exit_negative;
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstructibility analysis of Boolean control networks in algebraic form", "bcnrecon"};
  app.require_subcommand(1);

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide reconstructibility and print witnesses");
  analyze_cmd->add_option("file", file, "Network file ('-' for stdin)")->required();

  std::string inputs, outputs;
  auto* track_cmd = app.add_subcommand("track", "Determine the current state from an input/output record");
  track_cmd->add_option("file", file, "Network file ('-' for stdin)")->required();
  track_cmd->add_option("--inputs", inputs, "Input word, whitespace-separated 1-based indices")->required();
  track_cmd->add_option("--outputs", outputs, "Output word, one more letter than the input word")->required();

  std::string graph_kind;
  auto* export_cmd = app.add_subcommand("export", "Print a graph in DOT format");
  export_cmd->add_option("graph", graph_kind, "wpg | dfa | stg")->required()->check(CLI::IsMember({"wpg", "dfa", "stg"}));
  export_cmd->add_option("file", file, "Network file ('-' for stdin)")->required();

  std::vector<std::string> gen_params;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Write a network file: example5 | cycle-stayer N | stay-stepper N | sat n g-bits | random N M Q seed");
  gen_cmd->add_option("params", gen_params, "Family and its parameters")->required();
  gen_cmd->add_option("-o,--output", gen_output, "Write to this file instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check the deciders against brute-force oracles");
  oracle_cmd->add_option("file", file, "Network file ('-' for stdin)")->required();

  std::vector<const char*> argv{"bcnrecon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (*gen_cmd) {
      const auto text = serialize_network(generate(gen_params));
      if (gen_output.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_output);
        if (!f) throw std::runtime_error("cannot write '" + gen_output + "'");
        f << text;
      }
      return exit_ok;
    }

    const Bcn bcn = load_network(file, in);
    if (*analyze_cmd) return analyze(bcn, out);
    if (*oracle_cmd) return oracle_check(bcn, out);
    if (*track_cmd) return track(bcn, inputs, outputs, out, err);
    if (*export_cmd) {
      if (graph_kind == "stg") {
        out << to_dot(state_transition_graph(bcn));
      } else {
        const auto g = build_wpg(bcn);
        out << (graph_kind == "wpg" ? to_dot(g) : to_dot(build_observer_dfa(g), g));
      }
      return exit_ok;
    }
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}

}  // namespace recon
