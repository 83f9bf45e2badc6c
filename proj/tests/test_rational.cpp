#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mahler/error.hpp"
#include "mahler/rational.hpp"

using namespace mahler;

TEST_CASE("make_rat canonicalizes") {
  Rat q = make_rat(Int(6), Int(-8));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
  CHECK(make_rat(Int(0), Int(5)) == 0);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), Error);
}

TEST_CASE("parse_rat round trips") {
  CHECK(parse_rat("7") == 7);
  CHECK(parse_rat("-7") == -7);
  CHECK(parse_rat(" 3/4 ") == make_rat(Int(3), Int(4)));
  CHECK(parse_rat("-6/4") == make_rat(Int(-3), Int(2)));
  CHECK(rat_to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("a"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
}

TEST_CASE("height of a rational is log of the larger of |num|, den") {
  CHECK(height_rational(Rat(0)) == 0.0);
  CHECK(height_rational(Rat(1)) == 0.0);
  CHECK(height_rational(Rat(-1)) == 0.0);
  // 1024 = 2^10: height exactly 10 log 2.
  CHECK(height_rational(Rat(1024)) == doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(height_rational(make_rat(Int(-3), Int(7))) ==
        doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(height_rational(make_rat(Int(1), Int(1024))) ==
        doctest::Approx(10.0 * std::log(2.0)).epsilon(1e-12));
  // Far beyond double range: h(2^10000) = 10000 log 2.
  Int big = pow_int(Int(2), 10000);
  CHECK(height_rational(Rat(big)) == doctest::Approx(10000.0 * std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("ilog floors the base logarithm") {
  CHECK(ilog(Int(1), 2) == 0);
  CHECK(ilog(Int(2), 2) == 1);
  CHECK(ilog(Int(3), 2) == 1);
  CHECK(ilog(Int(4), 2) == 2);
  CHECK(ilog(Int(80), 3) == 3);
  CHECK(ilog(Int(81), 3) == 4);
}

TEST_CASE("integer valuation") {
  CHECK(valuation_int(Int(48), Int(2)) == 4);
  CHECK(valuation_int(Int(48), Int(3)) == 1);
  CHECK(valuation_int(Int(7), Int(2)) == 0);
  CHECK(valuation_int(Int(-12), Int(2)) == 2);
}

TEST_CASE("hashing is value-based") {
  CHECK(hash_int(Int("123456789123456789123456789"), 1) ==
        hash_int(Int("123456789123456789123456789"), 1));
  CHECK(hash_int(Int(5), 1) != hash_int(Int(-5), 1));
  CHECK(hash_rat(make_rat(Int(2), Int(4)), 7) == hash_rat(make_rat(Int(1), Int(2)), 7));
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(97)));
  CHECK(!is_prime(Int(1)));
  CHECK(!is_prime(Int(91)));

  auto f = factor_integer(Int(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, unsigned long>{Int(2), 3});
  CHECK(f[1] == std::pair<Int, unsigned long>{Int(3), 2});
  CHECK(f[2] == std::pair<Int, unsigned long>{Int(5), 1});

  // Semiprime past the trial-division range.
  Int p("1000003"), q("1000033");
  auto g = factor_integer(p * q);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == p);
  CHECK(g[1].first == q);
}

TEST_CASE("euler phi and multiplicative order") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(multiplicative_order(3, 1) == 1);
  CHECK(multiplicative_order(2, 3) == 2);
}
