#pragma once

#include <cstddef>
#include <vector>

#include "mahler/polynomial.hpp"

namespace mahler {

// One cluster of root moduli. exact_one marks modulus certified to be exactly
// 1 through the cyclotomic / self-reciprocal route (then lo = hi = 1); other
// exact hits have lo = hi without the flag. root_count is the number of
// distinct roots of the input whose modulus lies in [lo, hi].
struct ModulusInterval {
  Rat lo;
  Rat hi;
  bool exact_one = false;
  std::size_t root_count = 0;
};

// Certified intervals covering every root modulus of p, sorted by lo, each of
// width <= eps or exact. Roots of modulus exactly 1 are recognized exactly and
// merged into a single exact_one interval; every other interval either
// excludes 1 entirely or is an exact rational modulus. Two distinct moduli
// closer than eps may share an interval. Escalation beyond precision_bits
// halvings (separating a stubborn modulus from 1 or from a bisection point)
// raises EscalationCapExceeded instead of rounding.
std::vector<ModulusInterval> root_modulus_intervals(const Polynomial& p, const Rat& eps,
                                                    unsigned long precision_bits = 2048);

}  // namespace mahler
