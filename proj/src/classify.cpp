#include "mahler/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mahler/compile.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/linrep.hpp"
#include "mahler/newton_polygon.hpp"
#include "mahler/rational.hpp"
#include "mahler/relation.hpp"
#include "mahler/root_modulus.hpp"

namespace mahler {
namespace {

// A certified magnitude bound written as base^exponent with base in (0, 1]
// and exponent > 0; p-adic moduli p^{-w} carry base 1/p and exponent w.
struct Magnitude {
  Rat base;
  Rat exponent;
};

// Decides a^ea < b^eb for positive rational bases and exponents. A wide
// double-log comparison settles the common case; near-ties fall back to an
// exact integer cross-power comparison, so interval endpoints that power up
// to an exact hit (they do occur) are never misjudged.
bool power_less(const Rat& a, const Rat& ea, const Rat& b, const Rat& eb) {
  double la = ea.get_d() * std::log(a.get_d());
  double lb = eb.get_d() * std::log(b.get_d());
  double scale = std::abs(la) + std::abs(lb) + 1.0;
  if (la < lb - 1e-9 * scale) return true;
  if (lb < la - 1e-9 * scale) return false;
  Int common = lcm(Int(ea.get_den()), Int(eb.get_den()));
  Rat e1r = ea * Rat(common);
  Rat e2r = eb * Rat(common);
  if (e1r.get_num() > 1000000 || e2r.get_num() > 1000000) {
    fail(ErrorKind::InternalError, "magnitude comparison exponent out of range");
  }
  unsigned long e1 = e1r.get_num().get_ui();
  unsigned long e2 = e2r.get_num().get_ui();
  Int an = a.get_num(), ad = a.get_den(), bn = b.get_num(), bd = b.get_den();
  Int t1, t2, t3, t4;
  mpz_pow_ui(t1.get_mpz_t(), an.get_mpz_t(), e1);
  mpz_pow_ui(t2.get_mpz_t(), bd.get_mpz_t(), e2);
  mpz_pow_ui(t3.get_mpz_t(), bn.get_mpz_t(), e2);
  mpz_pow_ui(t4.get_mpz_t(), ad.get_mpz_t(), e1);
  return t1 * t2 < t3 * t4;
}

bool magnitude_less(const Magnitude& x, const Magnitude& y) {
  return power_less(x.base, x.exponent, y.base, y.exponent);
}

std::vector<Int> primitive_int_coeffs(const Polynomial& p) {
  Int den(1);
  for (const Rat& c : p.coeffs()) den = lcm(den, Int(c.get_den()));
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * Rat(den);
    out.push_back(Int(scaled.get_num()));
  }
  Int content(0);
  for (const Int& v : out) content = gcd(content, v);
  if (content != 0) {
    for (Int& v : out) v /= content;
  }
  return out;
}

// Positive lower bound on every root modulus: |z| >= |c_0| / (|c_0| + max |c_i|).
Rat root_lower_bound(const Polynomial& p) {
  Rat c0 = abs(p.constant());
  Rat m(0);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) m = std::max(m, Rat(abs(p.coeff(i))));
  if (m == 0) return Rat(1);
  return c0 / (c0 + m);
}

// Iteration count n_0: any modulus below 1 among the roots of p_0 * p_d,
// raised to the k^{n_0} power, must drop below the smallest such modulus.
// With no sub-unit roots a single telescoping step suffices.
unsigned long iteration_count(const MahlerEquation& eq, unsigned long k,
                              unsigned long precision_bits) {
  Polynomial prod = (eq.coeffs[0] * eq.coeffs[eq.order()]).shifted_down();
  std::vector<std::pair<Magnitude, Magnitude>> subunit;  // (lower, upper) bounds
  if (!prod.is_constant()) {
    std::vector<Int> zc = primitive_int_coeffs(prod);
    std::set<Int> primes;
    for (const auto& [p, e] : factor_integer(abs(zc.front()))) primes.insert(p);
    for (const auto& [p, e] : factor_integer(abs(zc.back()))) primes.insert(p);
    for (const Int& p : primes) {
      for (const auto& [w, count] : padic_root_valuations(prod, p)) {
        if (w > 0) {
          Magnitude m{Rat(Int(1), p), w};
          subunit.emplace_back(m, m);
        }
      }
    }
    Rat floor_bound = root_lower_bound(prod);
    for (const auto& iv : root_modulus_intervals(prod, Rat(1, 1024), precision_bits)) {
      if (iv.exact_one || iv.hi >= 1) continue;
      Rat lo = iv.lo > 0 ? iv.lo : floor_bound;
      subunit.emplace_back(Magnitude{lo, Rat(1)}, Magnitude{iv.hi, Rat(1)});
    }
  }
  if (subunit.empty()) return 1;
  Magnitude rho = subunit.front().first;
  Magnitude top = subunit.front().second;
  for (const auto& [lo, hi] : subunit) {
    if (magnitude_less(lo, rho)) rho = lo;
    if (magnitude_less(top, hi)) top = hi;
  }
  for (unsigned long n0 = 1; n0 <= 64; ++n0) {
    Int kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), k, n0);
    if (power_less(top.base, top.exponent * Rat(kp), rho.base, rho.exponent)) return n0;
  }
  fail(ErrorKind::InternalError, "iteration count search did not converge");
}

}  // namespace

const char* growth_class_name(GrowthClass c) {
  switch (c) {
    case GrowthClass::C1Linear: return "linear";
    case GrowthClass::C2LogSquared: return "log-squared";
    case GrowthClass::C3Log: return "log";
    case GrowthClass::C4LogLog: return "log-log";
    case GrowthClass::C5Bounded: return "bounded";
  }
  return "unknown";
}

const char* confidence_name(Confidence c) {
  switch (c) {
    case Confidence::Certified: return "certified";
    case Confidence::VerifiedToOrder: return "verified-to-order";
    case Confidence::Heuristic: return "heuristic";
  }
  return "unknown";
}

EmpiricalClassification classify_empirical(const std::vector<double>& heights,
                                           unsigned long /*k*/,
                                           const EmpiricalOptions& options) {
  if (heights.size() < (std::size_t(1) << 12)) {
    fail(ErrorKind::TooFewTerms,
         "empirical classification needs at least 2^12 height values");
  }
  EmpiricalClassification out;
  for (std::size_t j = 0; (std::size_t(2) << j) <= heights.size(); ++j) {
    double m = 0.0;
    for (std::size_t n = std::size_t(1) << j; n < (std::size_t(2) << j); ++n) {
      m = std::max(m, heights[n]);
    }
    out.window_max.push_back(m);
  }
  out.burn_in = out.window_max.size() / 4;
  out.tail = std::min(options.tail_windows, out.window_max.size() - out.burn_in);
  const std::size_t lo = out.window_max.size() - out.tail;

  auto add_test = [&](const std::string& label, GrowthClass target, auto shape) {
    LadderTest t;
    t.label = label;
    t.target = target;
    for (std::size_t j = lo; j < out.window_max.size(); ++j) {
      t.tail.push_back(out.window_max[j] / shape(static_cast<double>(j)));
    }
    double mn = t.tail.front(), mx = t.tail.front(), sum = 0.0;
    for (double v : t.tail) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
      sum += v;
    }
    t.mean = sum / static_cast<double>(t.tail.size());
    // The bounded test measures flatness on an absolute scale so that
    // identically-zero heights count as flat rather than as 0/0.
    double denom = target == GrowthClass::C5Bounded ? std::max(1.0, std::abs(t.mean))
                                                    : std::max(std::abs(t.mean), 1e-12);
    t.spread = (mx - mn) / denom;
    t.drift = (t.tail.back() - t.tail.front()) / std::max(std::abs(t.tail.front()), 1e-12);
    if (target == GrowthClass::C5Bounded) {
      t.passed = t.spread <= options.tau;
    } else {
      t.passed = t.mean > 1e-9 && t.spread <= options.tau &&
                 std::abs(t.drift) <= options.drift_tolerance;
    }
    out.ladder.push_back(std::move(t));
  };
  add_test("linear", GrowthClass::C1Linear, [](double j) { return std::pow(2.0, j); });
  add_test("log-squared", GrowthClass::C2LogSquared, [](double j) { return j * j; });
  add_test("log", GrowthClass::C3Log, [](double j) { return j; });
  add_test("log-log", GrowthClass::C4LogLog, [](double j) { return std::log(j); });
  add_test("bounded", GrowthClass::C5Bounded, [](double) { return 1.0; });

  std::size_t win = out.ladder.size();
  for (std::size_t i = 0; i < out.ladder.size(); ++i) {
    if (out.ladder[i].passed) {
      win = i;
      break;
    }
  }
  if (win == out.ladder.size()) {
    // No rung converged; fall back to the best-fitting shape, ties toward the
    // faster-growing class.
    out.fallback = true;
    win = 0;
    for (std::size_t i = 1; i < out.ladder.size(); ++i) {
      if (out.ladder[i].spread < out.ladder[win].spread) win = i;
    }
  }
  out.value = out.ladder[win].target;
  if (out.value == GrowthClass::C1Linear) {
    // Per-index slope: the window maximum sits near the right edge 2^{j+1}-1.
    double sum = 0.0;
    for (std::size_t j = lo; j < out.window_max.size(); ++j) {
      sum += out.window_max[j] / (std::pow(2.0, static_cast<double>(j) + 1.0) - 1.0);
    }
    out.slope = sum / static_cast<double>(out.tail);
  } else {
    out.slope = out.ladder[win].mean;
  }
  // Lead over the closest rung that could actually have won: shapes that
  // demand growth are out of the running when the data is flat, and flat data
  // should not read as a narrow victory.
  double runner = -1.0;
  for (std::size_t i = 0; i < out.ladder.size(); ++i) {
    if (i == win) continue;
    const LadderTest& t = out.ladder[i];
    if (t.target != GrowthClass::C5Bounded && !(t.mean > 1e-9)) continue;
    if (runner < 0.0 || t.spread < runner) runner = t.spread;
  }
  out.margin = runner < 0.0 ? 1.0 : runner - out.ladder[win].spread;
  return out;
}

StructuralClassification classify_structural(const SeriesSpec& spec,
                                             const StructuralOptions& options) {
  StructuralClassification out;
  StructuralEvidence& ev = out.evidence;
  const unsigned long k = spec.equation.k;

  MinimalEquationResult reduced = minimal_order_relation(spec);
  ev.working = reduced.equation;
  ev.working_certified = reduced.equation_certified;
  ev.minimality_certified = reduced.minimality_certified;
  ev.relation_verified_to = reduced.verified_to;

  ev.iteration_steps = iteration_count(ev.working, k, options.precision_bits);
  SteppedEquation stepped = iterate_equation(ev.working, ev.iteration_steps);
  ev.iterated = to_mahler(stepped);
  ev.leading_split = unit_root_split(stepped.coeffs[0]);
  if (!ev.leading_split.remainder.is_constant()) {
    out.value = GrowthClass::C1Linear;
    return out;
  }

  bool c2 = false;
  for (const auto& [order, mult] : ev.leading_split.cyclotomic) {
    (void)mult;
    if (std::gcd(order, k) != 1) continue;
    FactorCheck fc;
    fc.order = order;
    fc.fixing_power = multiplicative_order(k, order);
    MahlerEquation rel = rebase_relation(ev.working, fc.fixing_power);
    fc.r0_divisible = rel.coeffs[0].divide_exact(cyclotomic_polynomial(order)).has_value();
    ev.factor_checks.push_back(fc);
    c2 = c2 || fc.r0_divisible;
  }
  if (c2) {
    out.value = GrowthClass::C2LogSquared;
    return out;
  }

  // 3/4/5 split through the compiled minimal representation.
  try {
    MahlerEquation gap = normalize_equation(ev.iterated);
    std::size_t need = gap.coeffs[0].valuation();
    SeriesSpec it_spec = make_spec(gap, expand(spec, need), spec.name);
    ShiftResult sh = shift_spec(it_spec);
    ev.shift_certified = sh.equation_certified;
    ev.shift_verified_to = sh.verified_to;
    LinearRepresentation rep = regular_compile(it_spec);
    ev.compiled_dimension = rep.dim();
    SemigroupTask task;
    task.generators = rep.mu;
    task.dim = rep.dim();
    task.closure_cap = options.closure_cap;
    task.depth_cap = options.depth_cap;
    SemigroupVerdict verdict = analyze_semigroup(task);
    ev.semigroup = verdict;
    switch (verdict.kind) {
      case VerdictKind::Finite:
        out.value = GrowthClass::C5Bounded;
        break;
      case VerdictKind::TameNotFinite:
        out.value = GrowthClass::C4LogLog;
        break;
      case VerdictKind::NotTame:
        out.value = GrowthClass::C3Log;
        break;
      case VerdictKind::Inconclusive:
        ev.notes.push_back("semigroup analysis inconclusive: " + verdict.reason);
        break;
    }
  } catch (const Error& e) {
    ev.notes.push_back(std::string("compilation stalled: ") + e.what());
  }
  return out;
}

ClassificationReport classify(const SeriesSpec& spec, std::size_t n,
                              const ClassifyOptions& options) {
  ClassificationReport report;
  report.name = spec.name;
  report.k = spec.equation.k;
  try {
    std::vector<Rat> values = expand(spec, n);
    report.empirical = classify_empirical(height_sequence(values), report.k, options.empirical);
  } catch (const Error& e) {
    report.notes.push_back(std::string("empirical route unavailable: ") + e.what());
  }
  try {
    report.structural = classify_structural(spec, options.structural);
  } catch (const Error& e) {
    report.notes.push_back(std::string("structural route unavailable: ") + e.what());
  }

  const bool structural_decided = report.structural && report.structural->value.has_value();
  if (structural_decided) {
    report.value = *report.structural->value;
    const StructuralEvidence& ev = report.structural->evidence;
    bool downgraded = false;
    std::size_t vto = 0;
    if (!ev.working_certified) {
      downgraded = true;
      vto = std::max(vto, ev.relation_verified_to);
    }
    if (!ev.shift_certified) {
      downgraded = true;
      vto = std::max(vto, ev.shift_verified_to);
    }
    // A linear verdict leans on order-minimality: the reduced equation must
    // provably be the lowest order, otherwise the verdict is only as good as
    // the checked expansion.
    if (report.value == GrowthClass::C1Linear && !ev.minimality_certified) {
      downgraded = true;
      vto = std::max(vto, ev.relation_verified_to);
    }
    if (downgraded && vto == 0) vto = n;
    report.confidence = downgraded ? Confidence::VerifiedToOrder : Confidence::Certified;
    report.verified_to = vto;
  } else if (report.empirical) {
    report.value = report.empirical->value;
    report.confidence = Confidence::Heuristic;
    if (report.structural) {
      report.notes.push_back("headline class taken from the empirical route");
    }
  } else {
    report.confidence = Confidence::Heuristic;
    report.notes.push_back("both routes unavailable; class defaulted");
  }
  report.agreement = structural_decided && report.empirical &&
                     *report.structural->value == report.empirical->value;
  return report;
}

}  // namespace mahler
