#pragma once

#include <string>

#include "mahler/polynomial.hpp"

namespace mahler {

// Element of Q(z), kept normalized: gcd(num, den) = 1 and den monic.
// Zero is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::one()) {}
  explicit RationalFunction(const Rat& c) : num_(c), den_(Polynomial::one()) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  bool operator==(const RationalFunction& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

  // Applies z -> z^m to numerator and denominator.
  RationalFunction substitute_power(std::size_t m) const;

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace mahler
