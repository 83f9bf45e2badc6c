#pragma once

#include <cstddef>

#include "mahler/polynomial.hpp"

namespace mahler {

// Number of real roots of p in the half-open interval (lo, hi], counted
// without multiplicity, by Sturm's theorem. Neither endpoint may be a root.
std::size_t real_roots_in(const Polynomial& p, const Rat& lo, const Rat& hi);

// Number of roots of p (with multiplicity) of modulus < r, for rational
// r > 0. Exact: the circle is parameterized rationally and the winding number
// of the image curve comes out of a Sturm-chain Cauchy index. Precondition:
// no root of p has modulus exactly r — run count_roots_on_circle first.
std::size_t count_roots_inside(const Polynomial& p, const Rat& r);

// Number of roots of modulus exactly r, for squarefree p with p(0) != 0.
// Real candidates +-r are checked directly; complex pairs are found through
// the self-reciprocal gcd of p(rz) and its reversal, folded by w = z + 1/z,
// whose real roots in (-2, 2) each account for one conjugate pair.
std::size_t count_roots_on_circle(const Polynomial& p, const Rat& r);

}  // namespace mahler
