#include "mahler/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "mahler/error.hpp"

namespace mahler {

namespace {

Polynomial z_power_minus_one(unsigned long n) {
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = Rat(-1);
  c[n] = Rat(1);
  return Polynomial(std::move(c));
}

Polynomial compute_cyclotomic(unsigned long n, std::map<unsigned long, Polynomial>& cache);

const Polynomial& cached_cyclotomic(unsigned long n,
                                    std::map<unsigned long, Polynomial>& cache) {
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n, cache)).first;
  return it->second;
}

// z^n - 1 = prod_{d | n} Phi_d, so Phi_n is the quotient by the proper divisors.
Polynomial compute_cyclotomic(unsigned long n, std::map<unsigned long, Polynomial>& cache) {
  Polynomial quotient = z_power_minus_one(n);
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < n) quotient = *quotient.divide_exact(cached_cyclotomic(d, cache));
    unsigned long e = n / d;
    if (e != d && e < n) quotient = *quotient.divide_exact(cached_cyclotomic(e, cache));
  }
  return quotient;
}

}  // namespace

Polynomial cyclotomic_polynomial(unsigned long n) {
  if (n == 0) fail(ErrorKind::InternalError, "cyclotomic order must be positive");
  static std::map<unsigned long, Polynomial> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cached_cyclotomic(n, cache);
}

Polynomial UnitRootSplit::reassemble() const {
  Polynomial out = remainder * unit;
  for (const auto& [order, mult] : cyclotomic) {
    Polynomial phi = cyclotomic_polynomial(order);
    for (std::size_t i = 0; i < mult; ++i) out = out * phi;
  }
  return out.times_power(power_of_z);
}

UnitRootSplit unit_root_split(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "unit_root_split of the zero polynomial");
  UnitRootSplit out;
  out.power_of_z = p.valuation();
  Polynomial rest = p.shifted_down();
  // Phi_n can divide rest only while phi(n) <= deg rest, and phi(n) >= sqrt(n/2)
  // bounds the orders left to try by 2 deg^2.
  for (unsigned long n = 1; rest.degree() > 0 &&
       n <= 2 * static_cast<unsigned long>(rest.degree()) *
                static_cast<unsigned long>(rest.degree()) + 1;
       ++n) {
    if (euler_phi(n) > static_cast<unsigned long>(rest.degree())) continue;
    Polynomial phi_n = cyclotomic_polynomial(n);
    std::size_t mult = 0;
    while (true) {
      auto q = rest.divide_exact(phi_n);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.cyclotomic.emplace_back(n, mult);
  }
  out.unit = rest.leading();
  out.remainder = rest * (Rat(1) / out.unit);
  return out;
}

bool roots_confined_to_radix_unit_roots(const Polynomial& p, unsigned long radix) {
  if (p.is_zero()) return false;
  UnitRootSplit split = unit_root_split(p);
  if (split.remainder.degree() > 0) return false;
  for (const auto& [order, mult] : split.cyclotomic) {
    (void)mult;
    if (std::gcd(order, radix) == 1) return false;
  }
  return true;
}

}  // namespace mahler
