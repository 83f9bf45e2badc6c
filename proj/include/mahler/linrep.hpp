#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mahler/equation.hpp"
#include "mahler/polynomial.hpp"
#include "mahler/rational.hpp"

namespace mahler {

using RatMatrix = std::vector<std::vector<Rat>>;

// Linear representation of a k-regular sequence in the row convention:
// a_n = u * mu(d_1) * ... * mu(d_s) * v where d_1 ... d_s is the canonical
// base-k expansion of n, most significant digit first, and n = 0 reads the
// empty word. Every constructor in this module guarantees u * mu(0) = u, so
// the value is insensitive to leading zeros.
struct LinearRepresentation {
  unsigned long k = 2;
  std::vector<Rat> u;
  std::vector<RatMatrix> mu;  // digit-major: mu[r], r = 0..k-1
  std::vector<Rat> v;

  std::size_t dim() const { return u.size(); }
};

Rat eval_linrep(const LinearRepresentation& rep, unsigned long long n);

// Compiles f(z) = sum_{j>=1} (-coeffs[j]) f(z^{k^j}) -- an equation whose
// stored form has coeffs[0] identically 1 -- into a representation of the
// coefficient sequence, over the section-operator-closed basis
// { z^i f(z^{k^j}) : 0 <= i <= e, 0 <= j <= d }.
LinearRepresentation becker_to_linrep(const MahlerEquation& eq, const Rat& a0);

// Representation of the coefficient sequence of p (eventually zero), built by
// closing {p} under the section operators.
LinearRepresentation linrep_of_polynomial(const Polynomial& p, unsigned long k);

// Convolution product rep: value at n is sum_{i+j=n} a_i b_j.
LinearRepresentation cauchy_convolution(const LinearRepresentation& a,
                                        const LinearRepresentation& b);

// Word-convolution rep: value at n is the sum of a([prefix]) b([suffix]) over
// the s+1 splits of the canonical expansion of n.
LinearRepresentation word_convolution(const LinearRepresentation& a,
                                      const LinearRepresentation& b);

LinearRepresentation sum_linrep(const LinearRepresentation& a,
                                const LinearRepresentation& b);
LinearRepresentation scale_linrep(const Rat& c, const LinearRepresentation& a);

// Two-sided reduction to the reachable/observable subrepresentation; the
// result dimension is the Hankel rank of the sequence.
LinearRepresentation minimize_linrep(const LinearRepresentation& rep);

struct Automaton {
  unsigned long k = 2;
  std::vector<std::vector<Rat>> states;  // state 0 is the start
  std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
  std::vector<Rat> outputs;
};

// Breadth-first closure of {u mu(w)}; throws OrbitNotFinite past the cap.
Automaton to_automaton(const LinearRepresentation& rep, std::size_t state_cap = 4096);

std::string to_dot(const Automaton& a);

}  // namespace mahler
