#include "mahler/disk_count.hpp"

#include <utility>
#include <vector>

#include "mahler/error.hpp"

namespace mahler {

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// f_{j+1} = -rem(f_{j-1}, f_j), stopping before a zero remainder.
std::vector<Polynomial> negative_remainder_chain(Polynomial f0, Polynomial f1) {
  std::vector<Polynomial> chain;
  chain.push_back(std::move(f0));
  if (f1.is_zero()) return chain;
  chain.push_back(std::move(f1));
  while (true) {
    auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    (void)q;
    if (r.is_zero()) return chain;
    chain.push_back(-r);
  }
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t variations_at(const std::vector<Polynomial>& chain, const Rat& x) {
  std::vector<int> signs;
  for (const Polynomial& f : chain) signs.push_back(sign_of(f.evaluate(x)));
  return variations(signs);
}

std::size_t variations_at_infinity(const std::vector<Polynomial>& chain, bool positive) {
  std::vector<int> signs;
  for (const Polynomial& f : chain) {
    if (f.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(f.leading());
    if (!positive && f.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

struct ComplexRat {
  Rat re;
  Rat im;
};

// q evaluated at a complex rational point.
ComplexRat evaluate_complex(const Polynomial& q, const ComplexRat& z) {
  ComplexRat acc{Rat(0), Rat(0)};
  for (long i = q.degree(); i >= 0; --i) {
    Rat re = acc.re * z.re - acc.im * z.im + q.coeff(static_cast<std::size_t>(i));
    Rat im = acc.re * z.im + acc.im * z.re;
    acc = {re, im};
  }
  return acc;
}

struct ComplexPoly {
  Polynomial re;
  Polynomial im;
};

ComplexPoly multiply(const ComplexPoly& a, const ComplexPoly& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

std::size_t real_roots_in(const Polynomial& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "root counting on the zero polynomial");
  if (lo >= hi) return 0;
  if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0)
    fail(ErrorKind::InternalError, "root-count endpoint is itself a root");
  if (p.degree() < 1) return 0;
  auto chain = negative_remainder_chain(p, p.derivative());
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::size_t count_roots_inside(const Polynomial& p, const Rat& r) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "disk counting on the zero polynomial");
  if (r <= 0) fail(ErrorKind::InternalError, "disk radius must be positive");
  long n = p.degree();
  if (n == 0) return 0;

  // Rational rotation zeta with |zeta| = 1 from a Pythagorean triple, chosen
  // so the image curve closes at a point off the real axis: the leading
  // coefficient of the imaginary part below is Im p(-r zeta), and a nonzero
  // value keeps the Cauchy index honest at infinity. At most 2n rotations can
  // fail, so the search ends.
  ComplexRat zeta{Rat(0), Rat(0)};
  bool found = false;
  for (unsigned long a = 2; a < 2 * static_cast<unsigned long>(n) + 4 && !found; ++a) {
    Int den(static_cast<long>(a * a + 1));
    ComplexRat candidate{make_rat(Int(static_cast<long>(a * a - 1)), den),
                         make_rat(Int(2 * static_cast<long>(a)), den)};
    ComplexRat at{-r * candidate.re, -r * candidate.im};
    ComplexRat value = evaluate_complex(p, at);
    if (value.re == 0 && value.im == 0)
      fail(ErrorKind::InternalError, "disk counting with a root on the circle");
    if (value.im != 0) {
      zeta = candidate;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InternalError, "no usable circle rotation");

  // z(t) = r zeta (1 - t^2 + 2it) / (1 + t^2) walks the circle once as t runs
  // over the reals. Clearing (1 + t^2)^n makes p(z(t)) a polynomial curve
  // A(t) + i B(t); its winding number around 0 is the number of roots inside,
  // and equals half the Cauchy index of A/B over the whole line.
  Polynomial one_plus_t2(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  std::vector<Polynomial> v_pow(static_cast<std::size_t>(n) + 1);
  v_pow[0] = Polynomial::one();
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j)
    v_pow[j] = v_pow[j - 1] * one_plus_t2;

  Polynomial blade = Polynomial(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});  // 1 - t^2
  Polynomial two_t = Polynomial(std::vector<Rat>{Rat(0), Rat(2)});
  ComplexPoly zt{blade * (r * zeta.re) - two_t * (r * zeta.im),
                 blade * (r * zeta.im) + two_t * (r * zeta.re)};

  ComplexPoly acc{Polynomial(p.coeff(static_cast<std::size_t>(n))), Polynomial()};
  for (long j = n - 1; j >= 0; --j) {
    acc = multiply(acc, zt);
    acc.re = acc.re + v_pow[static_cast<std::size_t>(n - j)] *
                          p.coeff(static_cast<std::size_t>(j));
  }

  auto chain = negative_remainder_chain(acc.im, acc.re);
  std::size_t up = variations_at_infinity(chain, false);
  std::size_t down = variations_at_infinity(chain, true);
  if (up < down || (up - down) % 2 != 0)
    fail(ErrorKind::InternalError, "winding computation out of balance");
  return (up - down) / 2;
}

std::size_t count_roots_on_circle(const Polynomial& p, const Rat& r) {
  if (p.is_zero() || p.constant() == 0)
    fail(ErrorKind::InternalError, "on-circle counting needs p(0) != 0");
  if (r <= 0) fail(ErrorKind::InternalError, "circle radius must be positive");
  std::size_t count = 0;
  if (p.evaluate(r) == 0) ++count;
  if (p.evaluate(-r) == 0) ++count;

  // Scale the circle to radius 1: complex roots of modulus r pair up with
  // their conjugate-reciprocals, so they all divide gcd(q, reverse(q)).
  Polynomial q = p.scale_argument(r);
  Polynomial g = poly_gcd(q, q.reversed());
  for (long s : {1L, -1L})
    if (g.evaluate(Rat(s)) == 0) g = *g.divide_exact(
        Polynomial(std::vector<Rat>{Rat(-s), Rat(1)}));
  if (g.degree() <= 0) return count;

  // g is now palindromic of even degree; fold it through w = z + 1/z with
  // z^j + z^-j = C_j(w), C_0 = 2, C_1 = w, C_{j+1} = w C_j - C_{j-1}. Unit
  // circle points map to w in (-2, 2), each conjugate pair to one real root.
  long d = g.degree();
  if (d % 2 != 0) fail(ErrorKind::InternalError, "self-reciprocal part has odd degree");
  for (long i = 0; i <= d; ++i)
    if (g.coeff(static_cast<std::size_t>(i)) != g.coeff(static_cast<std::size_t>(d - i)))
      fail(ErrorKind::InternalError, "self-reciprocal part is not palindromic");
  long half = d / 2;
  Polynomial w = Polynomial::monomial(Rat(1), 1);
  Polynomial c_prev(Rat(2)), c_cur = w;
  Polynomial folded(g.coeff(static_cast<std::size_t>(half)));
  for (long j = 1; j <= half; ++j) {
    folded = folded + c_cur * g.coeff(static_cast<std::size_t>(half + j));
    Polynomial c_next = w * c_cur - c_prev;
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  count += 2 * real_roots_in(folded, Rat(-2), Rat(2));
  return count;
}

}  // namespace mahler
