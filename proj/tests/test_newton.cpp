#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mahler/error.hpp"
#include "mahler/newton_polygon.hpp"

using namespace mahler;

namespace {
Polynomial P(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("polygon of 2z^2 + z + 4 at p = 2") {
  // Points (0,2), (1,0), (2,1): two segments, slopes -2 then 1.
  auto segs = newton_polygon({Int(4), Int(1), Int(2)}, Int(2));
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].slope == -2);
  CHECK(segs[0].length == 1);
  CHECK(segs[1].slope == 1);
  CHECK(segs[1].length == 1);
  // Slope-length sum = v_p(leading) - v_p(constant) = 1 - 2.
  Rat total = segs[0].slope * Rat(static_cast<long>(segs[0].length)) +
              segs[1].slope * Rat(static_cast<long>(segs[1].length));
  CHECK(total == -1);
}

TEST_CASE("root valuations negate the slopes") {
  // Roots of 2z^2 + z + 4 over the 2-adics have valuations 2 and -1.
  auto vals = padic_root_valuations(P({4, 1, 2}), Int(2));
  REQUIRE(vals.size() == 2);
  CHECK(vals[0] == std::pair<Rat, std::size_t>{Rat(2), 1});
  CHECK(vals[1] == std::pair<Rat, std::size_t>{Rat(-1), 1});
}

TEST_CASE("unit polynomial has a single flat segment") {
  // z^2 + z + 1 at p = 5: all valuations 0.
  auto vals = padic_root_valuations(P({1, 1, 1}), Int(5));
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == std::pair<Rat, std::size_t>{Rat(0), 2});
}

TEST_CASE("fractional slope from an irreducible segment") {
  // z^2 - 2 at p = 2: both roots have valuation 1/2.
  auto vals = padic_root_valuations(P({-2, 0, 1}), Int(2));
  REQUIRE(vals.size() == 1);
  CHECK(vals[0].first == make_rat(Int(1), Int(2)));
  CHECK(vals[0].second == 2);
}

TEST_CASE("scaling and the root at zero are ignored") {
  // z(4z - 2)/3: nonzero root 1/2 has 2-adic valuation -(-1) ... v(1/2) = -1.
  std::vector<Rat> c{Rat(0), make_rat(Int(-2), Int(3)), make_rat(Int(4), Int(3))};
  auto vals = padic_root_valuations(Polynomial(c), Int(2));
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == std::pair<Rat, std::size_t>{Rat(-1), 1});
}

TEST_CASE("interior zero coefficients are skipped") {
  // z^3 + 8 at p = 2: points (0,3), (3,0); single segment slope -1, length 3.
  auto segs = newton_polygon({Int(8), Int(0), Int(0), Int(1)}, Int(2));
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].slope == -1);
  CHECK(segs[0].length == 3);
}

TEST_CASE("collinear points merge into one segment") {
  // 4 + 2z + z^2 at p = 2: points (0,2), (1,1), (2,0) collinear.
  auto segs = newton_polygon({Int(4), Int(2), Int(1)}, Int(2));
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].slope == -1);
  CHECK(segs[0].length == 2);
}

TEST_CASE("constant after stripping gives no roots") {
  CHECK(padic_root_valuations(P({0, 0, 7}), Int(3)).empty());
}

TEST_CASE("composite modulus is rejected") {
  try {
    newton_polygon({Int(4), Int(1)}, Int(6));
    FAIL("expected CompositePrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositePrime);
  }
}
