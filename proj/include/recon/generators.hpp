#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "recon/bcn.hpp"
#include "recon/stp.hpp"

namespace recon {

/// N = 5, M = Q = 2:
///   x(t+1) = delta_5[1,4,3,5,4,2,3,3,4,4] u(t) x(t),  y(t) = delta_2[1,1,2,1,2] x(t).
Bcn example_5state();

/// M = N, constant output. Input j drives every state to j, except state j,
/// which moves on to j mod N + 1. Pair graph: all (N^2-N)/2 pairs, every
/// outdegree 2, one non-trivial cycle of length N plus N self-loops.
/// Throws std::invalid_argument for N < 3.
Bcn family_cycle_stayer(std::size_t n);

/// M = N, constant output. Input j leaves every state in place, except state
/// j, which moves on to j mod N + 1. The observer DFA has 2^N - N - 1 states.
/// Throws std::invalid_argument for N < 3.
Bcn family_stay_stepper(std::size_t n);

/// Autonomous network (M = 1) on n Boolean variables:
///   x_k' = x_k xor (x_{k+1} and ... and x_n),  k < n
///   x_n' = x_n xor 1
///   y    = x_1 and g(x_2, ..., x_n)
/// Its state graph is one cycle through all 2^n states, and it is
/// reconstructible iff g is satisfiable. `g` must have arity n - 1 >= 1 and
/// width 1.
Bcn sat_reduction_bn(const TruthTable& g);

/// Truth table of arity k from a bit string of length 2^k: character i is g at
/// the argument vector whose binary value (first argument most significant)
/// is i, so "0001" is the conjunction of two arguments.
/// Throws std::invalid_argument on a malformed string.
TruthTable truth_table_from_bits(const std::string& bits);

/// Uniform random L and H from a seeded std::mt19937_64.
Bcn random_bcn(std::size_t n, std::size_t m, std::size_t q, std::uint64_t seed);

}  // namespace recon
