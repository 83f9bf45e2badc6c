#pragma once

#include "mahler/linrep.hpp"
#include "mahler/series_spec.hpp"

namespace mahler {

// Compiles a solution whose equation has all p_0-roots inside {0} or the
// radix-tied roots of unity into a minimized linear representation whose
// values are exactly the series coefficients.
//
// Pipeline: shift off the leading zero block, pass to the product
// g = f_0 * prod_i q_0(z^{k^i}) (which satisfies an equation with leading
// coefficient one), then peel the product back off one cyclotomic factor of
// q_0 at a time, each factor contributing a polynomial times a solution of an
// order-one equation with leading coefficient one. Every convolution is
// followed by minimization, so intermediate dimensions stay small.
//
// PreconditionViolated when q_0 of the shifted equation has a root outside
// {0} and the roots of unity whose order shares a factor with the radix.
// DivisionCheckFailed if an exact polynomial division demanded by the factor
// equations fails (this would indicate a broken factorization upstream).
LinearRepresentation regular_compile(const SeriesSpec& spec);

}  // namespace mahler
