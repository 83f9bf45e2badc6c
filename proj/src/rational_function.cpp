#include "mahler/rational_function.hpp"

#include "mahler/error.hpp"

namespace mahler {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::InternalError, "zero denominator in Q(z)");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  return *this + (-other);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.is_zero()) fail(ErrorKind::InternalError, "division by zero in Q(z)");
  return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::substitute_power(std::size_t m) const {
  return RationalFunction(num_.substitute_power(m), den_.substitute_power(m));
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace mahler
