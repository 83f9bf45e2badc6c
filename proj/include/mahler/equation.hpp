#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahler/polynomial.hpp"
#include "mahler/rational_function.hpp"

namespace mahler {

// p_0(z) f(z) + p_1(z) f(z^k) + ... + p_d(z) f(z^{k^d}) = 0. A normalized
// equation has p_0 != 0, p_d != 0, d >= 1, coprime coefficients, and the
// lowest nonzero coefficient of p_0 equal to 1.
struct MahlerEquation {
  unsigned long k = 2;
  std::vector<Polynomial> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::string to_string() const;
  bool operator==(const MahlerEquation& other) const = default;
};

// coeffs[0](z) f(z) = sum_{i>=1} coeffs[i](z) f(z^{k^{start+i-1}}): the
// result of telescoping an equation `start` times. start = 1 recovers the
// equation itself up to the sign convention. Coefficients are coprime and
// coeffs[0] != 0.
struct SteppedEquation {
  unsigned long k = 2;
  unsigned long start = 1;
  std::vector<Polynomial> coeffs;
};

// Divides out the common polynomial factor, trims trailing zero coefficients,
// resolves a zero p_0 by splitting off one base-k digit layer (which lowers
// the order by one), and scales so the lowest nonzero coefficient of p_0 is 1.
// AllZero when every coefficient vanishes; InvalidEquation when the order
// collapses to zero.
MahlerEquation normalize_equation(const MahlerEquation& eq);

// Telescopes f(z) against f(z^{k^n0}) through the companion system, clearing
// denominators and normalizing the result to coprime coefficients.
SteppedEquation iterate_equation(const MahlerEquation& eq, unsigned long n0);

// Rewrites a stepped equation as a plain Mahler equation by moving the
// right-hand side across the equals sign and filling the skipped powers with
// zero coefficients.
MahlerEquation to_mahler(const SteppedEquation& eq);

// Equation in radix k^e satisfied by the same series, of minimal order among
// windows f(z), f(z^{k^e}), ..., f(z^{k^{e i}}) found by linear algebra over
// the rational functions.
MahlerEquation rebase_relation(const MahlerEquation& eq, unsigned long e);

// Result of rewriting a candidate relation against eq. `consequence` means
// the candidate reduced to zero, so it follows from eq symbolically. A
// nonzero residual is returned as coordinates over f(z), ..., f(z^{k^{d-1}});
// it means eq does not imply the candidate (the candidate may still hold for
// a specific solution if eq is not of minimal order).
struct ReduceResult {
  bool consequence = false;
  std::vector<RationalFunction> residual;
};

ReduceResult reduce_relation(const MahlerEquation& eq,
                             const std::vector<std::pair<unsigned long, Polynomial>>& candidate);

}  // namespace mahler
