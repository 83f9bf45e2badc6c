#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mahler/polynomial.hpp"

namespace mahler {

struct NewtonSegment {
  Rat slope;
  std::size_t length;  // horizontal extent; equals the number of roots it accounts for
};

// Lower convex hull of {(i, v_p(c_i)) : c_i != 0} for an integer-coefficient
// polynomial given as c_0..c_deg. Segments come back left to right with
// strictly increasing slopes; sum of slope * length equals
// v_p(leading) - v_p(constant).
std::vector<NewtonSegment> newton_polygon(const std::vector<Int>& coeffs, const Int& prime);

// p-adic valuations of the nonzero roots of p, with multiplicities, as
// (valuation, count) pairs. Valuations are the negated polygon slopes; a root
// of valuation w has |root|_p = prime^(-w). Scaling and the root at 0 are
// stripped first.
std::vector<std::pair<Rat, std::size_t>> padic_root_valuations(const Polynomial& p,
                                                               const Int& prime);

}  // namespace mahler
