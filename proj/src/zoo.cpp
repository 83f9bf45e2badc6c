#include "mahler/zoo.hpp"

#include <cstddef>
#include <utility>

#include "mahler/error.hpp"

namespace mahler {

namespace {

Polynomial P(std::vector<Rat> c) { return Polynomial(std::move(c)); }

MahlerEquation equation_of(unsigned long k, std::vector<Polynomial> coeffs) {
  MahlerEquation eq;
  eq.k = k;
  eq.coeffs = std::move(coeffs);
  return eq;
}

// Truncated product accumulator over exact rationals.
void multiply_truncated(std::vector<Rat>& acc, const std::vector<Rat>& factor,
                        std::size_t n) {
  std::vector<Rat> out(n + 1, Rat(0));
  for (std::size_t i = 0; i < acc.size() && i <= n; ++i) {
    if (acc[i] == 0) continue;
    for (std::size_t j = 0; j < factor.size() && i + j <= n; ++j) {
      if (factor[j] == 0) continue;
      out[i + j] += acc[i] * factor[j];
    }
  }
  acc = std::move(out);
}

// factor(z^step) truncated to degree n.
std::vector<Rat> spread(const std::vector<Rat>& factor, std::size_t step,
                        std::size_t n) {
  std::vector<Rat> out(std::min(n + 1, factor.size() * step), Rat(0));
  for (std::size_t i = 0; i < factor.size(); ++i) {
    if (i * step > n) break;
    if (out.size() <= i * step) out.resize(i * step + 1, Rat(0));
    out[i * step] = factor[i];
  }
  return out;
}

std::size_t bit_count(std::size_t n) {
  std::size_t c = 0;
  for (; n; n >>= 1) c += n & 1;
  return c;
}

std::vector<Rat> oracle_geometric(std::size_t n) {
  std::vector<Rat> out;
  Rat v(1);
  for (std::size_t i = 0; i <= n; ++i) {
    out.push_back(v);
    v *= 2;
  }
  return out;
}

// Partitions into powers of two, by the standard coin DP.
std::vector<Rat> oracle_binary_partitions(std::size_t n) {
  std::vector<Int> dp(n + 1, Int(0));
  dp[0] = 1;
  for (std::size_t coin = 1; coin <= n; coin *= 2) {
    for (std::size_t v = coin; v <= n; ++v) dp[v] += dp[v - coin];
    if (coin > n / 2) break;
  }
  std::vector<Rat> out;
  out.reserve(n + 1);
  for (const auto& x : dp) out.push_back(Rat(x));
  return out;
}

std::vector<Rat> oracle_thin_geometric(std::size_t n) {
  std::vector<Rat> out(n + 1, Rat(0));
  Rat v(1);
  for (std::size_t p = 1; p <= n; p *= 2) {
    out[p] = v;
    v /= 2;
    if (p > n / 2) break;
  }
  return out;
}

std::vector<Rat> oracle_digit_sum(std::size_t n) {
  std::vector<Rat> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(Rat(static_cast<unsigned long>(bit_count(i))));
  return out;
}

std::vector<Rat> oracle_thue_morse(std::size_t n) {
  std::vector<Rat> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(Rat(static_cast<unsigned long>(bit_count(i) & 1)));
  return out;
}

// f = prod_j Q(z^{9^j}) for Q = (1-8z)(1+2z+4z^2)(1-2z^9); the telescoped
// form of f(z) = (1-8z)(1-2z^3)/(1-2z) f(z^3).
std::vector<Rat> oracle_denominator_trap(std::size_t n) {
  const std::vector<Rat> q = {Rat(1), Rat(-6), Rat(-12), Rat(-32), Rat(0),
                              Rat(0),  Rat(0),  Rat(0),  Rat(0),  Rat(-2),
                              Rat(12), Rat(24), Rat(64)};
  std::vector<Rat> acc = {Rat(1)};
  std::size_t step = 1;
  while (step <= n) {
    multiply_truncated(acc, spread(q, step, n), n);
    if (step > n / 9) break;
    step *= 9;
  }
  acc.resize(n + 1, Rat(0));
  return acc;
}

std::vector<Rat> oracle_stern(std::size_t n) {
  std::vector<Rat> acc = {Rat(1)};
  std::size_t step = 1;
  while (step <= n) {
    const std::vector<Rat> factor = {Rat(1), Rat(1), Rat(1)};
    multiply_truncated(acc, spread(factor, step, n), n);
    if (step > n / 2) break;
    step *= 2;
  }
  acc.resize(n + 1, Rat(0));
  return acc;
}

std::vector<Rat> oracle_neg_product(std::size_t n) {
  std::vector<Rat> out(n + 1, Rat(0));
  out[0] = 1;
  if (n >= 1) out[1] = -1;
  return out;
}

}  // namespace

const std::vector<std::string>& zoo_names() {
  static const std::vector<std::string> names = {
      "geometric",        "prod_inv_cyclo", "thin_geometric", "digit_sum",
      "thue_morse",       "denominator_trap", "stern",        "neg_product"};
  return names;
}

ZooEntry zoo(const std::string& name, std::size_t n) {
  ZooEntry entry;
  entry.name = name;
  if (name == "geometric") {
    // 1/(1-2z): (1-2z)f = (1-2z^2)f(z^2)
    entry.spec = make_spec(
        equation_of(2, {P({Rat(1), Rat(-2)}), P({Rat(-1), Rat(0), Rat(2)})}),
        {Rat(1)}, name);
    entry.expected_class = 1;
    entry.oracle = oracle_geometric(n);
  } else if (name == "prod_inv_cyclo") {
    // prod 1/(1-z^{2^i}): (1-z)f = f(z^2)
    entry.spec = make_spec(
        equation_of(2, {P({Rat(1), Rat(-1)}), P({Rat(-1)})}), {Rat(1)}, name);
    entry.expected_class = 2;
    entry.oracle = oracle_binary_partitions(n);
  } else if (name == "thin_geometric") {
    // sum 2^{-n} z^{2^n}: z f = (1+z/2)f(z^2) - (1/2)f(z^4), homogenized
    // from 2f - f(z^2) = 2z.
    entry.spec = make_spec(
        equation_of(2, {P({Rat(0), Rat(1)}), P({Rat(-1), Rat(-1, 2)}),
                        P({Rat(1, 2)})}),
        {Rat(0), Rat(1)}, name);
    entry.expected_class = 3;
    entry.oracle = oracle_thin_geometric(n);
  } else if (name == "digit_sum") {
    // sum (binary digit sum of n) z^n, homogenized from
    // f = (1+z)f(z^2) + z/(1-z^2).
    entry.spec = make_spec(
        equation_of(2, {P({Rat(0), Rat(1)}), P({Rat(-1), Rat(-1), Rat(-2)}),
                        P({Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)})}),
        {Rat(0), Rat(1)}, name);
    entry.expected_class = 4;
    entry.oracle = oracle_digit_sum(n);
  } else if (name == "thue_morse") {
    // parity of binary digit sums, homogenized from f = (1-z)f(z^2) + z/(1-z^2).
    entry.spec = make_spec(
        equation_of(2, {P({Rat(0), Rat(1)}), P({Rat(-1), Rat(-1)}),
                        P({Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)})}),
        {Rat(0), Rat(1)}, name);
    entry.expected_class = 5;
    entry.oracle = oracle_thue_morse(n);
  } else if (name == "denominator_trap") {
    // (1-2z)f = (1-8z)(1-2z^3)f(z^3) over radix 3; the root 1/2 of p_0
    // cancels after one iteration, so the solution is regular anyway.
    entry.spec = make_spec(
        equation_of(3, {P({Rat(1), Rat(-2)}),
                        P({Rat(-1), Rat(8), Rat(0), Rat(2), Rat(-16)})}),
        {Rat(1)}, name);
    entry.expected_class = 3;
    entry.oracle = oracle_denominator_trap(n);
  } else if (name == "stern") {
    // f = (1+z+z^2)f(z^2)
    entry.spec = make_spec(
        equation_of(2, {P({Rat(1)}), P({Rat(-1), Rat(-1), Rat(-1)})}),
        {Rat(1)}, name);
    entry.expected_class = 3;
    entry.oracle = oracle_stern(n);
  } else if (name == "neg_product") {
    // prod 1/(1+z^{2^i}) = 1-z: (1+z)f = f(z^2)
    entry.spec = make_spec(
        equation_of(2, {P({Rat(1), Rat(1)}), P({Rat(-1)})}), {Rat(1)}, name);
    entry.expected_class = 5;
    entry.oracle = oracle_neg_product(n);
  } else {
    fail(ErrorKind::UnknownName, "unknown zoo entry \"" + name + "\"");
  }
  return entry;
}

}  // namespace mahler
