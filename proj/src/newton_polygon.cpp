#include "mahler/newton_polygon.hpp"

#include "mahler/error.hpp"

namespace mahler {

namespace {

struct Point {
  Int x;
  Int y;
};

// cross(o, a, b) > 0 means o -> a -> b turns left.
Int cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<NewtonSegment> newton_polygon(const std::vector<Int>& coeffs, const Int& prime) {
  if (!is_prime(prime))
    fail(ErrorKind::CompositePrime, "newton_polygon at non-prime " + prime.get_str());
  std::vector<Point> pts;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    pts.push_back({Int(static_cast<unsigned long>(i)),
                   Int(valuation_int(coeffs[i], prime))});
  }
  if (pts.empty()) fail(ErrorKind::InternalError, "newton_polygon of the zero polynomial");
  // Lower hull, left to right: interior vertices are strict left turns, so the
  // segment slopes increase strictly.
  std::vector<Point> hull;
  for (const Point& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::vector<NewtonSegment> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Int run = hull[i].x - hull[i - 1].x;
    out.push_back({make_rat(hull[i].y - hull[i - 1].y, run), run.get_ui()});
  }
  return out;
}

std::vector<std::pair<Rat, std::size_t>> padic_root_valuations(const Polynomial& p,
                                                               const Int& prime) {
  if (p.is_zero()) fail(ErrorKind::InternalError, "root valuations of the zero polynomial");
  Polynomial stripped = p.shifted_down();
  if (stripped.degree() == 0) return {};
  auto [content, ints] = primitive_integer_parts(stripped);
  (void)content;
  std::vector<std::pair<Rat, std::size_t>> out;
  for (const NewtonSegment& seg : newton_polygon(ints, prime))
    out.emplace_back(-seg.slope, seg.length);
  return out;
}

}  // namespace mahler
