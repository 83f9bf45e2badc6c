#include "mahler/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "mahler/error.hpp"

namespace mahler {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorKind::SyntaxError, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_from_long(long n) { return Rat(n); }

Rat parse_rat(const std::string& text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body = text.substr(begin, end - begin);
  if (body.empty()) fail(ErrorKind::SyntaxError, "empty rational literal");

  auto is_int = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  std::size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!is_int(body)) fail(ErrorKind::SyntaxError, "bad rational literal: " + text);
    return Rat(Int(body));
  }
  std::string num = body.substr(0, slash);
  std::string den = body.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    fail(ErrorKind::SyntaxError, "bad rational literal: " + text);
  Int d(den);
  if (d == 0) fail(ErrorKind::SyntaxError, "zero denominator: " + text);
  return make_rat(Int(num), d);
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double log_abs(const Int& n) {
  signed long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * M_LN2;
}

double height_rational(const Rat& value) {
  if (value == 0) return 0.0;
  Int num = abs(value.get_num());
  const Int& den = value.get_den();
  return log_abs(num >= den ? num : den);
}

double to_double(const Rat& value) { return value.get_d(); }

long ilog(const Int& n, unsigned long base) {
  if (n < 1) fail(ErrorKind::InternalError, "ilog needs n >= 1");
  Int pow = 1;
  long e = 0;
  while (pow * static_cast<long>(base) <= n) {
    pow *= static_cast<long>(base);
    ++e;
  }
  return e;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
  return Rat(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

std::size_t hash_int(const Int& n, std::size_t seed) {
  const mpz_srcptr z = n.get_mpz_t();
  std::size_t h = seed ^ (static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL);
  std::size_t count = static_cast<std::size_t>(std::abs(z->_mp_size));
  for (std::size_t i = 0; i < count; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_rat(const Rat& value, std::size_t seed) {
  return hash_int(value.get_den(), hash_int(value.get_num(), seed));
}

unsigned long valuation_int(const Int& n, const Int& p) {
  if (n == 0) fail(ErrorKind::InternalError, "valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n must be odd, composite, > 1.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void collect_primes(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  collect_primes(d, out);
  collect_primes(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factor_integer(const Int& n) {
  if (n == 0) fail(ErrorKind::InternalError, "factorization of zero");
  Int m = abs(n);
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 100000 && Int(p) * static_cast<long>(p) <= m; ++p)
    while (m % p == 0) {
      primes.push_back(Int(p));
      m /= p;
    }
  collect_primes(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned long>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n, m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned long multiplicative_order(unsigned long k, unsigned long n) {
  if (n == 1) return 1;
  if (std::gcd(k, n) != 1)
    fail(ErrorKind::InternalError, "multiplicative order needs gcd(k,n)=1");
  unsigned long j = 1;
  unsigned long pow = k % n;
  while (pow != 1) {
    pow = (pow * k) % n;
    ++j;
    if (j > n) fail(ErrorKind::InternalError, "order search overran");
  }
  return j;
}

}  // namespace mahler
