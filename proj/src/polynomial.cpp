#include "mahler/polynomial.hpp"

#include <sstream>

#include "mahler/error.hpp"

namespace mahler {

Polynomial::Polynomial(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  prune();
}

Polynomial Polynomial::monomial(const Rat& c, std::size_t power) {
  if (c == 0) return Polynomial();
  std::vector<Rat> v(power + 1, Rat(0));
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::prune() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Polynomial::coeff(std::size_t i) const {
  static const Rat zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rat Polynomial::leading() const {
  return coeffs_.empty() ? Rat(0) : coeffs_.back();
}

Rat Polynomial::constant() const { return coeff(0); }

std::size_t Polynomial::valuation() const {
  if (coeffs_.empty()) return 0;
  std::size_t v = 0;
  while (coeffs_[v] == 0) ++v;
  return v;
}

Rat Polynomial::lowest_coeff() const {
  return coeffs_.empty() ? Rat(0) : coeffs_[valuation()];
}

Polynomial Polynomial::operator-() const {
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
  std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& scalar) const {
  if (scalar == 0) return Polynomial();
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scalar;
  return Polynomial(std::move(out));
}

Rat Polynomial::evaluate(const Rat& point) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
  return acc;
}

Polynomial Polynomial::substitute_power(std::size_t m) const {
  if (m == 0) fail(ErrorKind::InternalError, "substitute_power needs m >= 1");
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rat> out((coeffs_.size() - 1) * m + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_argument(const Rat& c) const {
  std::vector<Rat> out(coeffs_.size());
  Rat pow(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * pow;
    pow *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const {
  std::vector<Rat> out(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted_down() const {
  if (coeffs_.empty()) return Polynomial();
  std::size_t v = valuation();
  return Polynomial(std::vector<Rat>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

Polynomial Polynomial::times_power(std::size_t m) const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rat> out(coeffs_.size() + m, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + m] = coeffs_[i];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::InternalError, "division by zero polynomial");
  std::vector<Rat> rem = coeffs_;
  long dq = degree() - divisor.degree();
  if (dq < 0) return {Polynomial(), *this};
  std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1, Rat(0));
  const Rat lead = divisor.leading();
  for (long i = degree(); i >= divisor.degree(); --i) {
    Rat c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat q = c / lead;
    std::size_t shift = static_cast<std::size_t>(i - divisor.degree());
    quot[shift] = q;
    for (long j = 0; j <= divisor.degree(); ++j)
      rem[shift + static_cast<std::size_t>(j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) out << rat_to_string(a);
    if (i > 0) {
      if (!unit) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.leading());
}

ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::one(), s1 = Polynomial::zero();
  Polynomial t0 = Polynomial::zero(), t1 = Polynomial::one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Polynomial s = s0 - q * s1;
    Polynomial t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (!r0.is_zero()) {
    Rat inv = Rat(1) / r0.leading();
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

std::pair<Rat, std::vector<Int>> primitive_integer_parts(const Polynomial& p) {
  if (p.is_zero()) return {Rat(0), {}};
  Int den_lcm = 1;
  for (const Rat& c : p.coeffs()) {
    Int d = c.get_den();
    den_lcm = den_lcm / gcd(den_lcm, d) * d;
  }
  std::vector<Int> scaled(p.coeffs().size());
  Int content = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Rat c = p.coeffs()[i] * Rat(den_lcm);
    scaled[i] = c.get_num();
    content = gcd(content, scaled[i]);
  }
  bool negate = scaled.back() < 0;
  if (negate) content = -content;
  for (Int& c : scaled) c /= content;
  return {make_rat(content, den_lcm), std::move(scaled)};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return *p.divide_exact(g);
}

}  // namespace mahler
