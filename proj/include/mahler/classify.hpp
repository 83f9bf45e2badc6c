#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mahler/cyclotomic.hpp"
#include "mahler/equation.hpp"
#include "mahler/semigroup.hpp"
#include "mahler/series_spec.hpp"

namespace mahler {

// Height growth classes, ordered by strictly decreasing growth: Theta(n),
// Theta(log^2 n), Theta(log n), Theta(log log n), O(1).
enum class GrowthClass {
  C1Linear = 1,
  C2LogSquared = 2,
  C3Log = 3,
  C4LogLog = 4,
  C5Bounded = 5,
};

const char* growth_class_name(GrowthClass c);

// One rung of the empirical decision ladder: the windowed maxima M_j divided
// by the growth shape under test, restricted to the tail windows.
struct LadderTest {
  std::string label;
  GrowthClass target = GrowthClass::C5Bounded;
  std::vector<double> tail;
  double mean = 0.0;
  double spread = 0.0;  // (max - min) / |mean|, the convergence statistic
  double drift = 0.0;   // (last - first) / |first|, guards shape mismatch
  bool passed = false;
};

struct EmpiricalOptions {
  double tau = 0.35;              // spread threshold for "converged"
  double drift_tolerance = 0.15;  // |drift| beyond this rejects the shape
  std::size_t tail_windows = 6;
};

struct EmpiricalClassification {
  GrowthClass value = GrowthClass::C5Bounded;
  std::vector<double> window_max;  // M_j over dyadic windows [2^j, 2^{j+1})
  std::size_t burn_in = 0;         // leading windows excluded from the tests
  std::size_t tail = 0;            // number of windows each test looks at
  std::vector<LadderTest> ladder;  // in C1..C5 order
  bool fallback = false;           // no rung passed; nearest spread was used
  double slope = 0.0;              // growth constant of the winning shape
  double margin = 0.0;             // runner-up spread minus winner spread
};

// Decides the growth class from height data alone. Windows are dyadic and
// the first quarter is discarded; each shape test requires a positive,
// converged, drift-free tail, evaluated from the fastest growth down, first
// hit wins. TooFewTerms below 2^12 heights.
EmpiricalClassification classify_empirical(const std::vector<double>& heights,
                                           unsigned long k,
                                           const EmpiricalOptions& options = {});

// One cyclotomic factor Phi_n of the iterated leading coefficient with n
// coprime to the radix, and the divisibility test deciding class 2.
struct FactorCheck {
  unsigned long order = 1;         // n
  unsigned long fixing_power = 1;  // multiplicative order of k mod n
  bool r0_divisible = false;       // Phi_n divides r_0 of the rebased relation
};

struct StructuralEvidence {
  MahlerEquation working;  // equation after the order-reduction attempt
  bool working_certified = true;
  bool minimality_certified = false;
  std::size_t relation_verified_to = 0;
  unsigned long iteration_steps = 1;  // n_0
  MahlerEquation iterated;            // plain form of the stepped equation
  UnitRootSplit leading_split;        // split of the iterated leading coefficient
  std::vector<FactorCheck> factor_checks;
  std::optional<SemigroupVerdict> semigroup;
  std::size_t compiled_dimension = 0;
  bool shift_certified = true;
  std::size_t shift_verified_to = 0;
  std::vector<std::string> notes;
};

struct StructuralOptions {
  std::size_t closure_cap = 20000;
  std::size_t depth_cap = 16;
  unsigned long precision_bits = 2048;
};

struct StructuralClassification {
  // Empty when the route stalls (inconclusive semigroup analysis or a failed
  // compilation); the evidence then records how far it got.
  std::optional<GrowthClass> value;
  StructuralEvidence evidence;
};

// Symbolic route: order reduction, root-magnitude-driven iteration count,
// unit-root split of the iterated leading coefficient (class 1 test),
// per-factor rebased-relation divisibility (class 2 test), then compilation
// to a minimal representation and semigroup analysis for the 3/4/5 split.
StructuralClassification classify_structural(const SeriesSpec& spec,
                                             const StructuralOptions& options = {});

enum class Confidence { Certified, VerifiedToOrder, Heuristic };

const char* confidence_name(Confidence c);

struct ClassifyOptions {
  EmpiricalOptions empirical;
  StructuralOptions structural;
};

struct ClassificationReport {
  std::string name;
  unsigned long k = 2;
  std::optional<StructuralClassification> structural;
  std::optional<EmpiricalClassification> empirical;
  GrowthClass value = GrowthClass::C5Bounded;  // reconciled headline class
  bool agreement = false;
  Confidence confidence = Confidence::Heuristic;
  std::size_t verified_to = 0;  // order behind a VerifiedToOrder confidence
  std::vector<std::string> notes;
};

// Runs both routes on an expansion of length n+1 and reconciles them. Route
// failures are recorded as notes instead of thrown. Certified requires every
// symbolic step to be exact: a certified working equation, a certified shift,
// a conclusive semigroup verdict, and (for class 1) certified minimality.
ClassificationReport classify(const SeriesSpec& spec, std::size_t n,
                              const ClassifyOptions& options = {});

}  // namespace mahler
