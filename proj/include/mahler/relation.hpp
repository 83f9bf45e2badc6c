#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "mahler/equation.hpp"
#include "mahler/rational.hpp"
#include "mahler/series_spec.hpp"

namespace mahler {

// A relation sum_i q_i(z) g(z^{k^i}) = 0 recovered from expanded
// coefficients. `certified` means it was symbolically reduced to zero
// against a known-valid equation; otherwise it is only known to hold through
// coefficient index `verified_to`.
struct RelationSearchOutcome {
  MahlerEquation equation;
  std::size_t order = 0;
  bool certified = false;
  std::size_t verified_to = 0;
};

// Searches orders 1..max_order and coefficient degrees degree_floor..degree_cap
// (lowest order first, then lowest degree) for a relation satisfied by the
// series g given coefficient-wise. Candidate vectors are drawn from the
// nullspace of the truncated linear system and checked against
// k^{D+2}(delta+1)*4 coefficient rows. `require_unit_constant` restricts to
// relations with q_0(0) != 0. When `certify_against` is given and the
// candidate's order reaches that equation's, the candidate is certified via
// symbolic reduction. A nonzero degree_floor lets escalation ladders skip
// ranges already searched.
std::optional<RelationSearchOutcome> search_low_order_relation(
    const std::function<Rat(std::size_t)>& coeff, unsigned long k,
    std::size_t max_order, std::size_t degree_cap, bool require_unit_constant,
    const MahlerEquation* certify_against, std::size_t degree_floor = 0);

// Lowest-order equation the series of `spec` satisfies, found by
// guess-and-verify against its own expansion. Falls back to the input
// equation when nothing smaller surfaces. Minimality is a proof only at
// order 1; otherwise it holds for the searched degree range and truncation
// order, both recorded.
struct MinimalEquationResult {
  MahlerEquation equation;
  bool equation_certified = true;
  bool minimality_certified = false;
  std::size_t verified_to = 0;
  std::size_t degree_bound = 0;
};

MinimalEquationResult minimal_order_relation(const SeriesSpec& spec);

}  // namespace mahler
