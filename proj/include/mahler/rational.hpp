#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mahler {

// Exact arbitrary-precision arithmetic. Int/Rat are GMP types; everything in
// the library that is not explicitly a floating-point diagnostic stays exact.
using Int = mpz_class;
using Rat = mpq_class;

// num/den with canonicalization (gcd removed, denominator > 0).
Rat make_rat(const Int& num, const Int& den);

Rat rat_from_long(long n);

// Parses "p", "-p", "p/q" with optional surrounding whitespace. Rejects
// anything else, including q == 0.
Rat parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 1.
std::string rat_to_string(const Rat& value);

// Logarithmic Weil height of a reduced rational a/b: log max(|a|, |b|),
// and h(0) = 0. Double precision is enough downstream: heights feed only
// floating-point diagnostics, never exact decisions.
double height_rational(const Rat& value);

// log|n| for n != 0, computed from the bit representation so it stays
// accurate for numbers far beyond double range.
double log_abs(const Int& n);

double to_double(const Rat& value);

// Floor of log_base(n) for n >= 1.
long ilog(const Int& n, unsigned long base);

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

// Hash suitable for unordered containers; equal values hash equal.
std::size_t hash_int(const Int& n, std::size_t seed);
std::size_t hash_rat(const Rat& value, std::size_t seed);

// v_p(n) for n != 0; the exponent of prime p in n.
unsigned long valuation_int(const Int& n, const Int& p);

bool is_prime(const Int& n);

// Prime factorization of |n| for n != 0 as (prime, exponent) pairs in
// increasing prime order. Trial division with a Pollard rho fallback.
std::vector<std::pair<Int, unsigned long>> factor_integer(const Int& n);

unsigned long euler_phi(unsigned long n);

// Least j >= 1 with k^j == 1 (mod n); requires gcd(k, n) == 1. n == 1 gives 1.
unsigned long multiplicative_order(unsigned long k, unsigned long n);

}  // namespace mahler
