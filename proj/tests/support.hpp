#pragma once

// Test-only helpers: a reference STP evaluated entry by entry, word
// enumeration, and seeded random instance sampling.

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <algorithm>
#include <random>
#include <vector>

#include "recon/bcn.hpp"
#include "recon/generators.hpp"
#include "recon/stp.hpp"

namespace recon::testing {

// (A (x) I_k)(i, j) = A(i / k, j / k) if i % k == j % k, else 0.
inline std::int64_t kron_identity_entry(const DenseMatrix& a, std::size_t k, std::size_t i, std::size_t j) {
  return i % k == j % k ? a(i / k, j / k) : 0;
}

// STP straight from the definition, without materialising the Kronecker
// factors.
inline DenseMatrix reference_stp(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t alpha = std::lcm(a.cols(), b.rows());
  const std::size_t ka = alpha / a.cols(), kb = alpha / b.rows();
  DenseMatrix out(a.rows() * ka, b.cols() * kb);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < alpha; ++t) sum += kron_identity_entry(a, ka, i, t) * kron_identity_entry(b, kb, t, j);
      out(i, j) = sum;
    }
  return out;
}

// Calls f on every word over [1, m] of length <= max_len in length-lex order.
// Stops early when f returns false.
inline void for_each_word(std::size_t m, std::size_t max_len, const std::function<bool(const InputWord&)>& f) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    InputWord w(len, 1);
    while (true) {
      if (!f(w)) return;
      std::size_t i = len;
      while (i > 0 && w[i - 1] == m) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

inline std::size_t word_count(std::size_t m, std::size_t max_len) {
  std::size_t total = 0, layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len, layer *= m) total += layer;
  return total;
}

struct RandomSpec {
  std::size_t n, m, q;
  std::uint64_t seed;
};

// Deterministic sweep over N in [1, max_n], M in [1, max_m], Q in [1, max_q].
inline std::vector<RandomSpec> random_specs(std::size_t count, std::size_t max_n, std::size_t max_m,
                                            std::size_t max_q, std::uint64_t seed0 = 0) {
  std::mt19937_64 rng(seed0 ^ 0x5eedULL);
  std::vector<RandomSpec> specs;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t m = 1 + rng() % max_m;
    const std::size_t q = 1 + rng() % max_q;
    specs.push_back({n, m, q, seed0 + i});
  }
  return specs;
}

inline DenseMatrix random_01(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<std::int64_t>(rng() & 1);
  return m;
}

inline LogicalMatrix random_logical(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> idx(cols);
  for (auto& c : idx) c = 1 + rng() % rows;
  return LogicalMatrix(rows, idx);
}

}  // namespace recon::testing
