#include <doctest.h>

#include <numeric>

#include "recon/bcn.hpp"
#include "recon/generators.hpp"
#include "support.hpp"

using namespace recon;

namespace {

Bcn identity_network(std::size_t n, std::size_t m) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 1; i <= n; ++i) cols.push_back(i);
  return Bcn(LogicalMatrix(n, cols), LogicalMatrix::identity(n));
}

}  // namespace

TEST_CASE("step and output on the five-state network") {
  const auto bcn = example_5state();
  CHECK(bcn.num_states() == 5);
  CHECK(bcn.num_inputs() == 2);
  CHECK(bcn.num_outputs() == 2);
  CHECK(bcn.step(2, 1) == 4);
  CHECK(bcn.step(4, 1) == 5);
  CHECK(bcn.output(3) == 2);
  CHECK(bcn.output(1) == 1);
  CHECK_THROWS_AS(bcn.step(0, 1), std::out_of_range);
  CHECK_THROWS_AS(bcn.step(6, 1), std::out_of_range);
  CHECK_THROWS_AS(bcn.step(1, 3), std::out_of_range);
  CHECK_THROWS_AS(bcn.output(6), std::out_of_range);
}

TEST_CASE("step agrees with the semi-tensor product L u x") {
  const auto bcn = example_5state();
  for (Input u = 1; u <= 2; ++u)
    for (State x = 1; x <= 5; ++x) {
      const auto lux = stp_logical(stp_logical(bcn.transition_matrix(), LogicalMatrix::delta(2, u)),
                                   LogicalMatrix::delta(5, x));
      CHECK(lux == LogicalMatrix::delta(5, bcn.step(x, u)));
      CHECK(stp_logical(bcn.output_matrix(), LogicalMatrix::delta(5, x)) == LogicalMatrix::delta(2, bcn.output(x)));
    }
}

TEST_CASE("identity output map") {
  const auto bcn = identity_network(4, 2);
  for (State x = 1; x <= 4; ++x) CHECK(bcn.output(x) == x);
}

TEST_CASE("Bcn validates shapes") {
  CHECK_THROWS_AS(Bcn(LogicalMatrix(3, {1, 2}), LogicalMatrix(1, {1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Bcn(LogicalMatrix(2, {1, 2, 1, 2}), LogicalMatrix(2, {1, 2, 1})), std::invalid_argument);
  CHECK_NOTHROW(Bcn(LogicalMatrix(1, {1, 1, 1}), LogicalMatrix(1, {1})));
}

TEST_CASE("trajectories") {
  const auto bcn = example_5state();
  const InputWord u{1, 1};
  CHECK(state_trajectory(bcn, 2, u) == StateWord{2, 4, 5});
  CHECK(output_trajectory(bcn, 2, u) == OutputWord{1, 1, 2});
  CHECK(state_trajectory(bcn, 3, {}) == StateWord{3});
  CHECK(output_trajectory(bcn, 3, {}) == OutputWord{2});

  const auto id = identity_network(3, 2);
  CHECK(state_trajectory(id, 2, InputWord{1, 2, 1}) == StateWord{2, 2, 2, 2});

  const auto constant = family_cycle_stayer(4);
  for (State x = 1; x <= 4; ++x) CHECK(output_trajectory(constant, x, InputWord{3, 1, 4}) == OutputWord(4, 1));
}

TEST_CASE("property: trajectories are prefix-closed and consistent") {
  for (const auto& s : testing::random_specs(100, 6, 3, 4, 100)) {
    const auto bcn = random_bcn(s.n, s.m, s.q, s.seed);
    std::mt19937_64 rng(s.seed);
    InputWord w(rng() % 8);
    for (auto& u : w) u = 1 + rng() % s.m;
    for (State x0 = 1; x0 <= s.n; ++x0) {
      const auto xs = state_trajectory(bcn, x0, w);
      const auto ys = output_trajectory(bcn, x0, w);
      REQUIRE(xs.size() == w.size() + 1);
      REQUIRE(ys.size() == w.size() + 1);
      CHECK(xs.front() == x0);
      for (std::size_t t = 0; t < w.size(); ++t) CHECK(xs[t + 1] == bcn.step(xs[t], w[t]));
      for (std::size_t t = 0; t < xs.size(); ++t) CHECK(ys[t] == bcn.output(xs[t]));
      for (std::size_t k = 0; k <= w.size(); ++k) {
        const std::span<const Input> prefix(w.data(), k);
        CHECK(state_trajectory(bcn, x0, prefix) == StateWord(xs.begin(), xs.begin() + k + 1));
      }
    }
  }
}

TEST_CASE("state transition graph") {
  SUBCASE("cycle-stayer, N = 4") {
    const auto stg = state_transition_graph(family_cycle_stayer(4));
    auto weight = [&](State a, State b) -> std::vector<Input> {
      for (const auto& e : stg.edges)
        if (e.from == a && e.to == b) return e.weight;
      return {};
    };
    CHECK(weight(1, 2) == std::vector<Input>{1, 2});
    CHECK(weight(2, 1) == std::vector<Input>{1});
    CHECK(weight(1, 1).empty());
  }
  SUBCASE("single state") {
    const auto stg = state_transition_graph(Bcn(LogicalMatrix(1, {1, 1, 1}), LogicalMatrix(1, {1})));
    REQUIRE(stg.vertices.size() == 1);
    REQUIRE(stg.edges.size() == 1);
    CHECK(stg.edges[0].from == 1);
    CHECK(stg.edges[0].to == 1);
    CHECK(stg.edges[0].weight == std::vector<Input>{1, 2, 3});
  }
  SUBCASE("invariant: out-edge weights partition the input alphabet") {
    for (const auto& s : testing::random_specs(100, 6, 3, 4, 200)) {
      const auto bcn = random_bcn(s.n, s.m, s.q, s.seed);
      const auto stg = state_transition_graph(bcn);
      std::vector<std::vector<Input>> seen(s.n);
      for (const auto& e : stg.edges) {
        CHECK(!e.weight.empty());
        for (auto u : e.weight) {
          CHECK(bcn.step(e.from, u) == e.to);
          seen[e.from - 1].push_back(u);
        }
      }
      for (auto& v : seen) {
        std::sort(v.begin(), v.end());
        std::vector<Input> all(s.m);
        std::iota(all.begin(), all.end(), Input{1});
        CHECK(v == all);
      }
      for (State x = 1; x <= s.n; ++x) CHECK(stg.vertices[x - 1].output == bcn.output(x));
    }
  }
}
