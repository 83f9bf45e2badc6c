#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "mahler/equation.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/relation.hpp"
#include "mahler/series_spec.hpp"
#include "mahler/zoo.hpp"

using namespace mahler;

namespace {

Polynomial P(std::vector<Rat> c) { return Polynomial(std::move(c)); }

MahlerEquation EQ(unsigned long k, std::vector<Polynomial> coeffs) {
  MahlerEquation eq;
  eq.k = k;
  eq.coeffs = std::move(coeffs);
  return eq;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse accepts the expression form") {
  auto spec = parse_spec(R"({
    "k": 2,
    "equation": "(1-2*z)*f0 - (1-2*z^2)*f1",
    "seeds": ["1"]
  })");
  CHECK(spec.equation.k == 2);
  CHECK(spec.equation.coeffs[0] == P({Rat(1), Rat(-2)}));
  CHECK(spec.equation.coeffs[1] == P({Rat(-1), Rat(0), Rat(2)}));
  CHECK(spec.seeds == std::vector<Rat>{Rat(1)});
  CHECK(spec.seed_count_certified);
  auto coeffs = expand(spec, 5);
  CHECK(coeffs == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(32)});
}

TEST_CASE("parse accepts the coefficient-list form") {
  auto spec = parse_spec(R"({
    "k": 2,
    "equation": ["1 - 2*z", "-1 + 2*z^2"],
    "seeds": [1],
    "name": "geometric"
  })");
  CHECK(spec.equation == zoo("geometric", 0).spec.equation);
  CHECK(spec.name == "geometric");
}

TEST_CASE("parse rejects malformed documents") {
  CHECK(kind_of([] { parse_spec("{"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { parse_spec("[1,2]"); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"equation": "f0 - f1", "seeds": ["1"]})");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 1, "equation": "f0 - f1", "seeds": ["1"]})");
        }) == ErrorKind::RadixMismatch);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 2, "equation": [], "seeds": ["1"]})");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 2, "equation": 7, "seeds": ["1"]})");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 2, "equation": "f0 - f1", "seeds": "1"})");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 2, "equation": "f0 - f1", "seeds": ["1"], "name": 3})");
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([] {
          parse_spec(R"({"k": 2, "equation": "1 + 2*q", "seeds": ["1"]})");
        }) == ErrorKind::SyntaxError);
}

TEST_CASE("surplus seeds must satisfy the recurrence") {
  auto msg = message_of([] {
    parse_spec(R"({
      "k": 2,
      "equation": "(1-2*z)*f0 - (1-2*z^2)*f1",
      "seeds": ["1", "3"]
    })");
  });
  CHECK(msg.find("a_1 is forced to 2") != std::string::npos);
  CHECK(kind_of([] {
          parse_spec(R"({
            "k": 2,
            "equation": "(1-2*z)*f0 - (1-2*z^2)*f1",
            "seeds": ["1", "3"]
          })");
        }) == ErrorKind::InconsistentSeeds);
}

TEST_CASE("seeds below the forced range are checked against the residual") {
  // z f0 = (1+z/2) f1 - (1/2) f2 ties a_0 to itself: index 0 must vanish
  // in the residual, which [1, 1] violates.
  auto eq = zoo("thin_geometric", 0).spec.equation;
  CHECK(kind_of([&] { make_spec(eq, {Rat(1), Rat(1)}); }) ==
        ErrorKind::InconsistentSeeds);
  auto spec = make_spec(eq, {Rat(0), Rat(5)});
  CHECK(expand(spec, 2) == std::vector<Rat>{Rat(0), Rat(5), Rat(5, 2)});
}

TEST_CASE("too few seeds names the required count") {
  auto eq = zoo("thin_geometric", 0).spec.equation;
  CHECK(kind_of([&] { make_spec(eq, {Rat(0)}); }) == ErrorKind::UnderdeterminedSeeds);
  auto msg = message_of([&] { make_spec(eq, {Rat(0)}); });
  CHECK(msg.find("2") != std::string::npos);
}

TEST_CASE("make_spec normalizes the equation it stores") {
  auto spec = make_spec(
      EQ(2, {P({Rat(2), Rat(-4)}), P({Rat(-2), Rat(0), Rat(4)})}), {Rat(1)});
  CHECK(spec.equation.coeffs[0] == P({Rat(1), Rat(-2)}));
  CHECK(spec.seed_count_certified);
}

TEST_CASE("shift strips leading zeros exactly") {
  // z/(1-z) as a solution of z^2(1-z) f0 - z(1-z^2) f1 = 0.
  auto spec = make_spec(EQ(2, {P({Rat(0), Rat(0), Rat(1), Rat(-1)}) * P({Rat(1)}),
                              P({Rat(0), Rat(-1), Rat(0), Rat(1)})}),
                        {Rat(0), Rat(1)});
  CHECK(spec.equation.coeffs[0] == P({Rat(0), Rat(1)}));
  auto res = shift_spec(spec);
  CHECK(res.shift == 1);
  CHECK(res.prefix.is_zero());
  CHECK(res.equation_certified);
  CHECK(res.shifted.equation.coeffs[0] == P({Rat(1)}));
  CHECK(res.shifted.equation.coeffs[1] == P({Rat(-1), Rat(-1)}));
  CHECK(expand(res.shifted, 4) ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("shift leaves a unit constant term alone") {
  auto spec = zoo("geometric", 0).spec;
  auto res = shift_spec(spec);
  CHECK(res.shift == 0);
  CHECK(res.shifted.equation == spec.equation);
  CHECK(res.shifted.seeds == spec.seeds);
}

TEST_CASE("shift of the thin geometric series halves the weights") {
  auto res = shift_spec(zoo("thin_geometric", 0).spec);
  CHECK(res.shift == 1);
  CHECK(res.equation_certified);
  CHECK(res.shifted.equation.coeffs[0].constant() == 1);
  CHECK(expand(res.shifted, 7) ==
        std::vector<Rat>{Rat(1), Rat(1, 2), Rat(0), Rat(1, 4), Rat(0), Rat(0),
                         Rat(0), Rat(1, 8)});
}

TEST_CASE("shift reports the zero series") {
  auto spec = make_spec(zoo("geometric", 0).spec.equation, {Rat(0)});
  try {
    shift_spec(spec);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroSeries);
  }
}

TEST_CASE("shift advances past a coefficient the equation cannot anchor") {
  // z f0 = (1+z) f1 - f2 with seeds [1, 1] generates 1 + sum z^(2^n).  Every
  // relation this series satisfies has q_0(0) = 0 -- the z-coefficient of the
  // combination comes from q_0 alone -- so no amount of searching fixes the
  // constant term at shift 0.  Moving one step further, the tail
  // sum z^(2^n - 1) satisfies f0 = (1+z) f0(z^2) - z^2 f0(z^4), and the
  // skipped coefficient lands in the prefix.
  auto spec = make_spec(EQ(2, {P({Rat(0), Rat(1)}), P({Rat(-1), Rat(-1)}), P({Rat(1)})}),
                        {Rat(1), Rat(1)});
  auto orig = expand(spec, 65);
  CHECK(orig[0] == 1);
  CHECK(orig[1] == 1);
  CHECK(orig[2] == 1);
  CHECK(orig[3] == 0);
  CHECK(orig[4] == 1);
  CHECK(orig[64] == 1);
  CHECK(orig[63] == 0);

  auto res = shift_spec(spec);
  CHECK(res.shift == 1);
  CHECK(res.prefix == Polynomial::one());
  CHECK(res.shifted.equation.coeffs[0].constant() == 1);
  CHECK_FALSE(res.equation_certified);
  REQUIRE(res.verified_to >= 64);
  auto tail = expand(res.shifted, 64);
  for (std::size_t n = 0; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(tail[n] == orig[n + 1]);
  }
}

TEST_CASE("minimal order search confirms order one") {
  auto out = minimal_order_relation(zoo("geometric", 0).spec);
  CHECK(out.equation.order() == 1);
  CHECK(out.equation_certified);
  CHECK(out.minimality_certified);
  CHECK(out.equation == zoo("geometric", 0).spec.equation);
}

TEST_CASE("minimal order search keeps an already-minimal order-two equation") {
  auto entry = zoo("digit_sum", 0);
  auto out = minimal_order_relation(entry.spec);
  CHECK(out.equation_certified);
  CHECK(out.equation.order() == 2);
}

TEST_CASE("minimal order search drops a padded order") {
  // Pad the geometric equation to order 2 by rewriting its consequence at
  // radix 2: (1-2z) f0 - (1-2z^2) f1 = 0 implies the same with f1, f2.
  auto g = zoo("geometric", 0).spec.equation;
  auto padded = EQ(2, {g.coeffs[0], g.coeffs[1], Polynomial::zero()});
  padded.coeffs[2] = Polynomial::zero();
  // (1-2z)f0 - (1-2z^2)f1 plus z^2 * [(1-2z^2)f1 - (1-2z^4)f2]
  padded.coeffs[0] = g.coeffs[0];
  padded.coeffs[1] = g.coeffs[1] + P({Rat(0), Rat(0), Rat(1)}) * P({Rat(1), Rat(0), Rat(-2)});
  padded.coeffs[2] = P({Rat(0), Rat(0), Rat(1)}) * P({Rat(-1), Rat(0), Rat(0), Rat(0), Rat(2)});
  auto spec = make_spec(padded, {Rat(1)});
  CHECK(expand(spec, 4) == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8), Rat(16)});
  auto out = minimal_order_relation(spec);
  CHECK(out.equation.order() == 1);
  CHECK(out.equation == g);
  // Dropping below the input's order leaves nothing to reduce against, so
  // the result is verified numerically rather than certified symbolically.
  CHECK_FALSE(out.equation_certified);
  CHECK(out.verified_to > 0);
  CHECK(out.minimality_certified);
}

TEST_CASE("relation search certifies against a supplied equation") {
  auto entry = zoo("geometric", 0);
  CoefficientStream stream(entry.spec);
  auto coeff = [&stream](std::size_t n) -> Rat { return stream.at(n); };
  auto out = search_low_order_relation(coeff, 2, 1, 2, false, &entry.spec.equation);
  REQUIRE(out.has_value());
  CHECK(out->certified);
  CHECK(out->equation == entry.spec.equation);
}

TEST_CASE("relation search can require a unit constant term") {
  auto entry = zoo("thin_geometric", 0);
  CoefficientStream stream(entry.spec);
  auto coeff = [&stream](std::size_t n) -> Rat { return stream.at(n); };
  auto out = search_low_order_relation(coeff, 2, 3, 8, true, &entry.spec.equation);
  if (out) {
    CHECK(out->equation.coeffs[0].constant() != 0);
  }
}
