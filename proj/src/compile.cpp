#include "mahler/compile.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "mahler/cyclotomic.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/rational.hpp"

namespace mahler {
namespace {

Polynomial poly_pow(const Polynomial& base, unsigned long exponent) {
  Polynomial out = Polynomial::one();
  for (unsigned long i = 0; i < exponent; ++i) out = out * base;
  return out;
}

std::size_t checked_radix_power(unsigned long k, unsigned long exponent) {
  std::size_t out = 1;
  for (unsigned long i = 0; i < exponent; ++i) {
    if (out > static_cast<std::size_t>(-1) / k) {
      fail(ErrorKind::InternalError, "regular_compile: radix power overflow");
    }
    out *= k;
  }
  return out;
}

// gcd(l, k^j) grows with j until every shared prime reaches its multiplicity
// in l, then stays constant. Returns the stable value r and the smallest s
// with gcd(l, k^j) = r for all j > s.
struct StableGcd {
  unsigned long value = 1;
  unsigned long level = 0;
};

StableGcd stable_radix_gcd(unsigned long ell, unsigned long k) {
  Int l(ell);
  Int power(1);
  std::vector<unsigned long> history = {1};  // gcd(l, k^0)
  while (true) {
    power *= static_cast<unsigned long>(k);
    Int g = gcd(l, power);
    unsigned long gv = g.get_ui();
    if (gv == history.back()) break;
    history.push_back(gv);
  }
  StableGcd out;
  out.value = history.back();
  // The first exponent reaching the stable value is history.size() - 1; the
  // condition only constrains j > s, so s is one less (floored at zero).
  out.level = history.size() <= 1 ? 0 : static_cast<unsigned long>(history.size() - 2);
  return out;
}

// Representation of prod_{i>=0} Phi_ell(z^{k^i})^{-mult}, written as
// Q(z) * G(z) with Q = Phi_a(z^{k^s})^mult a polynomial and G the solution of
// the order-one equation G(z) = b(z) G(z^k) determined below.
LinearRepresentation factor_rep(unsigned long ell, unsigned long mult, unsigned long k) {
  StableGcd rg = stable_radix_gcd(ell, k);
  unsigned long a = ell / rg.value;
  std::size_t ks = checked_radix_power(k, rg.level);
  Polynomial phi_ell = cyclotomic_polynomial(ell);
  Polynomial q_base = cyclotomic_polynomial(a).substitute_power(ks);
  // The roots of phi_ell and of q_base both map into the roots of the
  // numerator under z -> z^k, and never coincide, so the quotient is exact.
  auto base = cyclotomic_polynomial(a).substitute_power(ks * k).divide_exact(phi_ell * q_base);
  if (!base) {
    fail(ErrorKind::DivisionCheckFailed,
         "regular_compile: cyclotomic factor equation is not an exact quotient");
  }
  Polynomial q = poly_pow(q_base, mult);
  MahlerEquation geq;
  geq.k = k;
  geq.coeffs = {Polynomial::one(), -poly_pow(*base, mult)};
  // The full product has constant term one, so G(0) is the reciprocal of
  // Q(0) = +-1.
  Rat g0 = Rat(1) / q.constant();
  LinearRepresentation g = becker_to_linrep(geq, g0);
  return minimize_linrep(cauchy_convolution(linrep_of_polynomial(q, k), g));
}

}  // namespace

LinearRepresentation regular_compile(const SeriesSpec& spec) {
  ShiftResult sh = shift_spec(spec);
  const MahlerEquation& eq = sh.shifted.equation;
  const unsigned long k = eq.k;
  const Polynomial& q0 = eq.coeffs[0];
  if (!roots_confined_to_radix_unit_roots(q0, k)) {
    fail(ErrorKind::PreconditionViolated,
         "regular_compile: a root of the leading coefficient lies outside {0} "
         "and the radix-tied roots of unity");
  }
  // The shifted equation is normalized with q0(0) = 1, so the split is a bare
  // product of cyclotomics of order >= 2 and carries no scalar.
  UnitRootSplit split = unit_root_split(q0);

  // g = f0 * prod_{i>=0} q0(z^{k^i}) satisfies the same-order equation with
  // leading coefficient one whose later coefficients fold partial products.
  std::size_t d = eq.order();
  MahlerEquation geq;
  geq.k = k;
  geq.coeffs.assign(d + 1, Polynomial::zero());
  geq.coeffs[0] = Polynomial::one();
  Polynomial partial = Polynomial::one();
  for (std::size_t j = 1; j <= d; ++j) {
    geq.coeffs[j] = eq.coeffs[j] * partial;
    partial = partial * q0.substitute_power(checked_radix_power(k, static_cast<unsigned long>(j)));
  }
  Rat a0 = expand(sh.shifted, 0)[0];
  LinearRepresentation rep = minimize_linrep(becker_to_linrep(geq, a0));

  // Peel the product back off one cyclotomic factor at a time.
  for (const auto& [order, mult] : split.cyclotomic) {
    rep = minimize_linrep(cauchy_convolution(rep, factor_rep(order, mult, k)));
  }
  if (eval_linrep(rep, 0) != a0) {
    fail(ErrorKind::InternalError, "regular_compile: constant term drifted during assembly");
  }

  // f(z) = prefix(z) + z^shift * f0(z).
  if (sh.shift > 0) {
    Polynomial monomial = Polynomial::one().times_power(sh.shift);
    rep = minimize_linrep(cauchy_convolution(linrep_of_polynomial(monomial, k), rep));
  }
  if (!sh.prefix.is_zero()) {
    rep = minimize_linrep(sum_linrep(linrep_of_polynomial(sh.prefix, k), rep));
  }
  return rep;
}

}  // namespace mahler
