#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mahler/polynomial.hpp"

namespace mahler {

// n-th cyclotomic polynomial, exact over Z. Cached internally; thread-safe.
Polynomial cyclotomic_polynomial(unsigned long n);

// Factorization p = unit * z^power_of_z * prod Phi_n(z)^mult * remainder. The
// remainder is monic with no root at 0 and no root of unity among its roots;
// re-splitting it returns it unchanged.
struct UnitRootSplit {
  Rat unit = Rat(1);
  std::size_t power_of_z = 0;
  std::vector<std::pair<unsigned long, std::size_t>> cyclotomic;  // (order, multiplicity)
  Polynomial remainder;

  Polynomial reassemble() const;
};

UnitRootSplit unit_root_split(const Polynomial& p);

// True when every root of p lies in {0} or is a root of unity whose order
// shares a prime factor with radix.
bool roots_confined_to_radix_unit_roots(const Polynomial& p, unsigned long radix);

}  // namespace mahler
