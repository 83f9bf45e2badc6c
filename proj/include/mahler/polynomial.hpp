#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahler/rational.hpp"

namespace mahler {

// Dense univariate polynomial over Q. Invariant: no trailing zero
// coefficients, so the zero polynomial has an empty coefficient vector and
// degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rat constant);
  explicit Polynomial(std::vector<Rat> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rat(1)); }
  // c * z^power
  static Polynomial monomial(const Rat& c, std::size_t power);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  // Coefficient of z^i; zero beyond the degree.
  const Rat& coeff(std::size_t i) const;
  Rat leading() const;
  Rat constant() const;
  // Multiplicity of the root 0; degree of the lowest nonzero monomial.
  std::size_t valuation() const;
  Rat lowest_coeff() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rat& scalar) const;
  bool operator==(const Polynomial& other) const = default;

  Rat evaluate(const Rat& point) const;
  // p(z^m); m >= 1.
  Polynomial substitute_power(std::size_t m) const;
  // p(c*z)
  Polynomial scale_argument(const Rat& c) const;
  // z^deg * p(1/z)
  Polynomial reversed() const;
  Polynomial derivative() const;
  // Quotient of division by z^valuation.
  Polynomial shifted_down() const;
  Polynomial times_power(std::size_t m) const;

  // Exact Euclidean division; both results over Q.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  // Quotient when the remainder is known to vanish; nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Renders in the surface grammar, e.g. "1 - 2*z + 3/4*z^2".
  std::string to_string() const;

 private:
  void prune();
  std::vector<Rat> coeffs_;
};

// Monic gcd (the zero polynomial if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// g = gcd(a, b) together with u, v such that u*a + v*b = g.
struct ExtendedGcd {
  Polynomial g, u, v;
};
ExtendedGcd poly_xgcd(const Polynomial& a, const Polynomial& b);

// Primitive integer form: returns (content, primitive) with
// p == content * primitive, primitive having coprime integer coefficients
// and positive leading coefficient. Zero input gives content 0.
std::pair<Rat, std::vector<Int>> primitive_integer_parts(const Polynomial& p);

// p / gcd(p, p'); same roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace mahler
