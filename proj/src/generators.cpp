#include "recon/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace recon {

Bcn example_5state() {
  return Bcn(LogicalMatrix(5, {1, 4, 3, 5, 4, 2, 3, 3, 4, 4}), LogicalMatrix(2, {1, 1, 2, 1, 2}));
}

namespace {

template <class Rule>
Bcn family_from_rule(std::size_t n, Rule rule) {
  if (n < 3) throw std::invalid_argument("family size N must be at least 3, got " + std::to_string(n));
  std::vector<std::size_t> cols;
  cols.reserve(n * n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i) cols.push_back(rule(i, j));
  return Bcn(LogicalMatrix(n, std::move(cols)), LogicalMatrix(n, std::vector<std::size_t>(n, 1)));
}

}  // namespace

Bcn family_cycle_stayer(std::size_t n) {
  return family_from_rule(n, [n](std::size_t x, std::size_t u) { return x == u ? u % n + 1 : u; });
}

Bcn family_stay_stepper(std::size_t n) {
  return family_from_rule(n, [n](std::size_t x, std::size_t u) { return x == u ? x % n + 1 : x; });
}

Bcn sat_reduction_bn(const TruthTable& g) {
  if (g.arity() < 1) throw std::invalid_argument("sat_reduction_bn: g needs at least one argument");
  if (g.width() != 1) throw std::invalid_argument("sat_reduction_bn: g must be single-valued");
  if (g.first_missing_row()) throw std::invalid_argument("sat_reduction_bn: g is partial");
  const std::size_t n = g.arity() + 1;

  auto f = TruthTable::from_function(n, n, [n](const std::vector<bool>& x) {
    std::vector<bool> next(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      bool tail = true;
      for (std::size_t i = k + 1; i < n; ++i) tail = tail && x[i];
      next[k] = x[k] != tail;
    }
    next[n - 1] = !x[n - 1];
    return next;
  });
  auto h = TruthTable::from_function(n, 1, [&g](const std::vector<bool>& x) {
    std::vector<bool> rest(x.begin() + 1, x.end());
    return std::vector<bool>{x[0] && (*g.get(rest))[0]};
  });
  auto form = boolean_to_algebraic(f, h);
  return Bcn(std::move(form.transition), std::move(form.output));
}

TruthTable truth_table_from_bits(const std::string& bits) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < bits.size()) ++k;
  if (bits.empty() || (std::size_t{1} << k) != bits.size())
    throw std::invalid_argument("truth table bit string must have length 2^k, got " + std::to_string(bits.size()));
  TruthTable t(k, 1);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw std::invalid_argument("truth table bit string may only contain 0 and 1");
    std::vector<bool> args(k);
    for (std::size_t a = 0; a < k; ++a) args[a] = ((i >> (k - 1 - a)) & 1) != 0;
    t.set(args, {bits[i] == '1'});
  }
  return t;
}

Bcn random_bcn(std::size_t n, std::size_t m, std::size_t q, std::uint64_t seed) {
  if (n < 1 || m < 1 || q < 1) throw std::invalid_argument("random_bcn: N, M, Q must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> state(1, n);
  std::uniform_int_distribution<std::size_t> out(1, q);
  std::vector<std::size_t> l(n * m), h(n);
  for (auto& c : l) c = state(rng);
  for (auto& c : h) c = out(rng);
  return Bcn(LogicalMatrix(n, std::move(l)), LogicalMatrix(q, std::move(h)));
}

}  // namespace recon
