#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mahler/linrep.hpp"
#include "mahler/polynomial.hpp"

namespace mahler {

// The multiplicative closure of a linear representation's digit matrices,
// together with the budgets the analysis is allowed to spend on it.
struct SemigroupTask {
  std::vector<RatMatrix> generators;  // square, all of dimension dim
  std::size_t dim = 0;
  std::size_t closure_cap = 1000000;
  std::size_t depth_cap = 16;
};

enum class VerdictKind { Finite, TameNotFinite, NotTame, Inconclusive };

// NotTame verdicts carry a replayable witness: multiplying out the witness
// word yields a matrix whose characteristic polynomial has a nonconstant
// remainder after stripping z-powers and cyclotomic factors.
struct SemigroupVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t cardinality = 0;          // Finite
  std::vector<unsigned long> witness;   // NotTame: generator indices, in order
  std::string reason;                   // Inconclusive
  std::size_t depth = 0;                // Inconclusive: sampling depth reached
};

// Characteristic polynomial, exact (division-free recurrence on traces).
Polynomial char_poly(const RatMatrix& m);

// True iff every eigenvalue lies in {0} or on the unit circle at a root of
// unity: the characteristic polynomial splits as unit * z^a * prod of
// cyclotomics with constant remainder.
bool element_is_tame(const RatMatrix& m);

struct ClosureResult {
  bool exceeded = false;
  std::vector<RatMatrix> elements;
  // elements[i] was produced as elements[parent[i]] * generators[letter[i]];
  // parent is npos for the generators themselves.
  std::vector<std::size_t> parent;
  std::vector<unsigned long> letter;

  std::vector<unsigned long> word_of(std::size_t index) const;
};

// Breadth-first product closure with exact element identity. Stops as soon
// as closure_cap distinct elements have been found.
ClosureResult bfs_closure(const SemigroupTask& task);

// Common invariant subspace chain over the rationals. The algebra span is
// saturated first; a full span settles irreducibility outright. Otherwise
// candidate subspaces are drawn from algebra orbits of the standard basis
// and from kernels, eigenspaces, and images of algebra elements, and the
// search recurses on the subspace and quotient actions.
struct Decomposition {
  enum class Kind { Irreducible, Chain, NoneFound };
  Kind kind = Kind::NoneFound;
  std::size_t algebra_dim = 0;
  // Chain only: proper invariant subspaces of the original space in
  // increasing order; each subspace is given by a basis of row vectors.
  std::vector<std::vector<std::vector<Rat>>> chain;
  // Diagonal blocks of the conjugated block-triangular form, innermost
  // first: blocks[b][g] is generator g's induced action. Irreducible and
  // NoneFound return the original generators as a single block.
  std::vector<std::vector<RatMatrix>> blocks;
};

Decomposition invariant_decomposition(const SemigroupTask& task);

// Layered decision: any non-tame product (generators first, then everything
// the closure walk discovers) is a NotTame witness; a stabilized closure is
// Finite; otherwise a block-triangular chain whose diagonal blocks all close
// finitely certifies TameNotFinite; failing that, products are sampled to
// depth_cap and the verdict is Inconclusive.
SemigroupVerdict analyze_semigroup(const SemigroupTask& task);

}  // namespace mahler
