#pragma once

// Boolean control networks in algebraic form:
//
//   x(t+1) = L u(t) x(t),   y(t) = H x(t)
//
// with x in Delta_N, u in Delta_M, y in Delta_Q. States, inputs and outputs
// are carried as 1-based indices (x = delta_N^i is the state `i`).

#include <cstddef>
#include <span>
#include <vector>

#include "recon/stp.hpp"

namespace recon {

using State = std::size_t;
using Input = std::size_t;
using Output = std::size_t;

using InputWord = std::vector<Input>;
using OutputWord = std::vector<Output>;
using StateWord = std::vector<State>;

class Bcn {
 public:
  /// `transition` must be N x (N*M) and `output` Q x N. Column (j-1)N + i of
  /// `transition` is the successor of state i under input j.
  /// Throws std::invalid_argument on shape mismatch.
  Bcn(LogicalMatrix transition, LogicalMatrix output);

  std::size_t num_states() const { return n_; }
  std::size_t num_inputs() const { return m_; }
  std::size_t num_outputs() const { return q_; }

  const LogicalMatrix& transition_matrix() const { return l_; }
  const LogicalMatrix& output_matrix() const { return h_; }

  /// Throws std::out_of_range for x outside [1,N] or u outside [1,M].
  State step(State x, Input u) const;
  /// Throws std::out_of_range for x outside [1,N].
  Output output(State x) const;

  friend bool operator==(const Bcn&, const Bcn&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::size_t q_;
  LogicalMatrix l_;
  LogicalMatrix h_;
};

/// x_0 x_1 ... x_p for the input word u_0 ... u_{p-1}.
StateWord state_trajectory(const Bcn& bcn, State x0, std::span<const Input> inputs);

/// y_0 y_1 ... y_p, the pointwise output of state_trajectory.
OutputWord output_trajectory(const Bcn& bcn, State x0, std::span<const Input> inputs);

/// Weighted digraph on (state, output) vertices; edge x -> x' carries
/// { u | step(x, u) = x' }.
struct TransitionGraph {
  struct Vertex {
    State state;
    Output output;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    State from;
    State to;
    std::vector<Input> weight;  // sorted

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::size_t num_inputs = 0;
  std::vector<Vertex> vertices;  // indexed by state - 1
  std::vector<Edge> edges;       // sorted by (from, to)
};

TransitionGraph state_transition_graph(const Bcn& bcn);

}  // namespace recon
