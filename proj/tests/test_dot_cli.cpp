#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "recon/cli.hpp"
#include "recon/dot.hpp"
#include "recon/generators.hpp"
#include "recon/network_io.hpp"
#include "support.hpp"

using namespace recon;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(RECON_TEST_DATA) + "/" + name);
  REQUIRE_MESSAGE(f, "missing fixture " << name);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const std::string example5_text = serialize_network(example_5state());

}  // namespace

TEST_CASE("DOT goldens") {
  const auto bcn = example_5state();
  const auto g = build_wpg(bcn);
  CHECK(to_dot(g) == slurp("golden/example5_wpg.dot"));
  CHECK(to_dot(build_observer_dfa(g), g) == slurp("golden/example5_dfa.dot"));
  CHECK(to_dot(state_transition_graph(family_cycle_stayer(4))) == slurp("golden/cycle_stayer4_stg.dot"));
  // Rendering is a pure function of the structure.
  CHECK(to_dot(build_wpg(bcn)) == to_dot(g));
}

TEST_CASE("DOT structure") {
  const auto g = build_wpg(example_5state());
  const auto wpg = to_dot(g);
  CHECK(count(wpg, std::regex(R"(^  "\d+,\d+";$)", std::regex::multiline)) == 4);
  CHECK(count(wpg, std::regex(" -> ")) == 2);
  const auto dfa = to_dot(build_observer_dfa(g), g);
  CHECK(count(dfa, std::regex(R"(^  s\d+ \[label=)", std::regex::multiline)) == 3);
  CHECK(count(dfa, std::regex(" -> ")) == 3);

  const auto empty = build_wpg(Bcn(LogicalMatrix(2, {2, 1}), LogicalMatrix::identity(2)));
  CHECK(to_dot(empty) == "digraph wpg {\n  node [shape=circle];\n}\n");
}

TEST_CASE("analyze") {
  auto r = cli({"analyze", "-"}, example5_text);
  CHECK(r.code == exit_ok);
  CHECK(r.out == slurp("golden/example5_analyze.txt"));

  r = cli({"analyze", std::string(RECON_TEST_DATA) + "/data/cycle_stayer4.net"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == slurp("golden/cycle_stayer4_analyze.txt"));

  r = cli({"analyze", "-"}, serialize_network(Bcn(LogicalMatrix(2, {2, 1}), LogicalMatrix(1, {1, 1}))));
  CHECK(r.code == exit_negative);
  CHECK(r.out.find("reconstructible: no\ncomplete-subgraph: {1,2}\n") != std::string::npos);

  r = cli({"analyze", "-"}, serialize_network(Bcn(LogicalMatrix(2, {2, 1}), LogicalMatrix::identity(2))));
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("homing-sequence: (empty)") != std::string::npos);
  CHECK(r.out.find("horizon: 0") != std::string::npos);
}

TEST_CASE("analyze errors") {
  auto r = cli({"analyze", "/nonexistent/file.net"});
  CHECK(r.code == exit_error);
  r = cli({"analyze", "-"}, "n_states = 2\n");
  CHECK(r.code == exit_error);
  CHECK(r.err.find("error:") != std::string::npos);
  r = cli({"frobnicate"});
  CHECK(r.code == exit_error);
  r = cli({});
  CHECK(r.code == exit_error);
}

TEST_CASE("track") {
  auto r = cli({"track", "-", "--inputs", "1 1", "--outputs", "1 1 2"}, example5_text);
  CHECK(r.code == exit_ok);
  CHECK(r.out == "X0: {1,2,4}\nX1: {1,4}\nX2: {5}\ncurrent state: 5\n");

  const auto injective = serialize_network(Bcn(LogicalMatrix(3, {2, 3, 1}), LogicalMatrix::identity(3)));
  r = cli({"track", "-", "--inputs", "", "--outputs", "2"}, injective);
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("current state: 2") != std::string::npos);

  r = cli({"track", "-", "--inputs", "1 1", "--outputs", "2 1 1"}, example5_text);
  CHECK(r.code == exit_negative);
  CHECK(r.err.find("no consistent state") != std::string::npos);

  r = cli({"track", "-", "--inputs", "", "--outputs", "1"}, example5_text);
  CHECK(r.code == exit_negative);
  CHECK(r.err.find("not homing") != std::string::npos);

  r = cli({"track", "-", "--inputs", "1 x", "--outputs", "1 1 2"}, example5_text);
  CHECK(r.code == exit_error);
  r = cli({"track", "-", "--inputs", "3", "--outputs", "1 1"}, example5_text);
  CHECK(r.code == exit_error);
}

TEST_CASE("export") {
  auto r = cli({"export", "wpg", "-"}, example5_text);
  CHECK(r.code == exit_ok);
  CHECK(r.out == slurp("golden/example5_wpg.dot"));
  r = cli({"export", "dfa", "-"}, example5_text);
  CHECK(r.out == slurp("golden/example5_dfa.dot"));
  r = cli({"export", "stg", std::string(RECON_TEST_DATA) + "/data/cycle_stayer4.net"});
  CHECK(r.out == slurp("golden/cycle_stayer4_stg.dot"));
  r = cli({"export", "graph", "-"}, example5_text);
  CHECK(r.code == exit_error);
}

TEST_CASE("gen and oracle-check") {
  auto r = cli({"gen", "example5"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == slurp("data/example5.net"));
  CHECK(cli({"analyze", "-"}, r.out).out == slurp("golden/example5_analyze.txt"));

  r = cli({"gen", "cycle-stayer", "4"});
  CHECK(r.out == slurp("data/cycle_stayer4.net"));
  auto check = cli({"oracle-check", "-"}, r.out);
  CHECK(check.code == exit_ok);
  CHECK(check.out.find("reconstructible (oracle): yes") != std::string::npos);
  CHECK(check.out.find("uniformly-reconstructible (oracle): no") != std::string::npos);
  CHECK(check.out.find("agreement: yes") != std::string::npos);

  r = cli({"gen", "random", "6", "3", "4", "42"});
  CHECK(r.code == exit_ok);
  CHECK(cli({"oracle-check", "-"}, r.out).out.find("agreement: yes") != std::string::npos);

  r = cli({"gen", "sat", "3", "0001"});
  CHECK(r.code == exit_ok);
  CHECK(parse_network(r.out).num_states() == 8);

  CHECK(cli({"gen", "cycle-stayer", "2"}).code == exit_error);
  CHECK(cli({"gen", "sat", "3", "01"}).code == exit_error);
  CHECK(cli({"gen", "random", "0", "1", "1", "1"}).code == exit_error);
  CHECK(cli({"gen", "mystery"}).code == exit_error);
  CHECK(cli({"gen", "stay-stepper", "four"}).code == exit_error);
}
