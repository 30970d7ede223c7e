#include "recon/bcn.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace recon {

namespace {

std::size_t input_count(const LogicalMatrix& l) {
  if (l.cols() % l.rows() != 0) {
    std::ostringstream msg;
    msg << "Bcn: transition matrix has " << l.cols() << " columns, not a multiple of N = " << l.rows();
    throw std::invalid_argument(msg.str());
  }
  return l.cols() / l.rows();
}

}  // namespace

Bcn::Bcn(LogicalMatrix transition, LogicalMatrix output)
    : n_(transition.rows()),
      m_(input_count(transition)),
      q_(output.rows()),
      l_(std::move(transition)),
      h_(std::move(output)) {
  if (h_.cols() != n_) {
    std::ostringstream msg;
    msg << "Bcn: output matrix has " << h_.cols() << " columns, expected N = " << n_;
    throw std::invalid_argument(msg.str());
  }
}

State Bcn::step(State x, Input u) const {
  if (x < 1 || x > n_) throw std::out_of_range("step: state " + std::to_string(x) + " out of range");
  if (u < 1 || u > m_) throw std::out_of_range("step: input " + std::to_string(u) + " out of range");
  return l_.col_index()[(u - 1) * n_ + (x - 1)];
}

Output Bcn::output(State x) const {
  if (x < 1 || x > n_) throw std::out_of_range("output: state " + std::to_string(x) + " out of range");
  return h_.col_index()[x - 1];
}

StateWord state_trajectory(const Bcn& bcn, State x0, std::span<const Input> inputs) {
  StateWord states;
  states.reserve(inputs.size() + 1);
  bcn.output(x0);  // range check even for the empty word
  states.push_back(x0);
  for (auto u : inputs) states.push_back(bcn.step(states.back(), u));
  return states;
}

OutputWord output_trajectory(const Bcn& bcn, State x0, std::span<const Input> inputs) {
  OutputWord ys;
  for (auto x : state_trajectory(bcn, x0, inputs)) ys.push_back(bcn.output(x));
  return ys;
}

TransitionGraph state_transition_graph(const Bcn& bcn) {
  TransitionGraph g;
  g.num_inputs = bcn.num_inputs();
  for (State x = 1; x <= bcn.num_states(); ++x) {
    g.vertices.push_back({x, bcn.output(x)});
    std::map<State, std::vector<Input>> out;
    for (Input u = 1; u <= bcn.num_inputs(); ++u) out[bcn.step(x, u)].push_back(u);
    for (auto& [to, weight] : out) g.edges.push_back({x, to, std::move(weight)});
  }
  return g;
}

}  // namespace recon
