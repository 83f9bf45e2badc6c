#include "mahler/root_modulus.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mahler/cyclotomic.hpp"
#include "mahler/disk_count.hpp"
#include "mahler/error.hpp"

namespace mahler {

namespace {

struct Segment {
  Rat lo;  // open end
  Rat hi;  // closed end
  std::size_t count;
};

class ModulusScan {
 public:
  ModulusScan(Polynomial q, const Rat& eps, unsigned long precision_bits)
      : q_(std::move(q)), eps_(eps) {
    floor_ = Rat(1) / Rat(pow_int(Int(2), precision_bits));
  }

  std::size_t inside(const Rat& r) {
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    std::size_t n = count_roots_inside(q_, r);
    cache_.emplace(r, n);
    return n;
  }

  bool good(const Rat& r) { return count_roots_on_circle(q_, r) == 0; }

  // Good radii a < center < b with exactly `expect` roots of modulus in
  // (a, b), found by halving toward center. Halving below the precision floor
  // means a root modulus hugs `center` tighter than the cap allows.
  std::pair<Rat, Rat> flank(const Rat& center, const Rat& lo_start, const Rat& hi_start,
                            std::size_t expect) {
    Rat a = lo_start, b = hi_start;
    while (true) {
      if (b - a < floor_)
        fail(ErrorKind::EscalationCapExceeded,
             "cannot separate a root modulus from " + rat_to_string(center) +
                 " within the precision cap");
      if (!good(a)) {
        a = (a + center) / 2;
        continue;
      }
      if (!good(b)) {
        b = (center + b) / 2;
        continue;
      }
      if (inside(b) - inside(a) == expect) return {a, b};
      a = (a + center) / 2;
      b = (center + b) / 2;
    }
  }

  void bisect(std::deque<Segment> work, std::vector<ModulusInterval>& out) {
    while (!work.empty()) {
      Segment seg = work.front();
      work.pop_front();
      if (seg.count == 0) continue;
      if (seg.hi - seg.lo <= eps_) {
        out.push_back({seg.lo, seg.hi, false, seg.count});
        continue;
      }
      if (seg.hi - seg.lo < floor_)
        fail(ErrorKind::EscalationCapExceeded,
             "bisection width fell below the precision cap before reaching eps");
      Rat mid = (seg.lo + seg.hi) / 2;
      std::size_t on = count_roots_on_circle(q_, mid);
      if (on == 0) {
        std::size_t below = inside(mid) - inside(seg.lo);
        work.push_back({seg.lo, mid, below});
        work.push_back({mid, seg.hi, seg.count - below});
      } else {
        out.push_back({mid, mid, false, on});
        auto [a, b] = flank(mid, (seg.lo + mid) / 2, (mid + seg.hi) / 2, on);
        work.push_back({seg.lo, a, inside(a) - inside(seg.lo)});
        work.push_back({b, seg.hi, inside(seg.hi) - inside(b)});
      }
    }
  }

  const Polynomial& q() const { return q_; }

 private:
  Polynomial q_;
  Rat eps_;
  Rat floor_;
  std::map<Rat, std::size_t> cache_;
};

Rat sum_abs_ratio(const Polynomial& p, std::size_t over) {
  Rat s(0);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    if (i == over) continue;
    s += abs(p.coeff(i) / p.coeff(over));
  }
  return s;
}

}  // namespace

std::vector<ModulusInterval> root_modulus_intervals(const Polynomial& p, const Rat& eps,
                                                    unsigned long precision_bits) {
  if (p.is_zero())
    fail(ErrorKind::InternalError, "modulus intervals of the zero polynomial");
  if (eps <= 0) fail(ErrorKind::InternalError, "eps must be positive");
  if (precision_bits < 2 || precision_bits > 1u << 24)
    fail(ErrorKind::InternalError, "unusable precision cap");

  std::vector<ModulusInterval> out;
  UnitRootSplit split = unit_root_split(p);
  if (split.power_of_z > 0) out.push_back({Rat(0), Rat(0), false, 1});
  std::size_t unit_count = 0;
  for (const auto& [order, mult] : split.cyclotomic) {
    (void)mult;
    unit_count += euler_phi(order);
  }

  Polynomial q = squarefree_part(split.remainder);
  if (q.degree() > 0) {
    ModulusScan scan(q, eps, precision_bits);
    std::size_t on_unit = count_roots_on_circle(q, 1);
    unit_count += on_unit;

    // Flank 1 so everything else bisects in regions that provably exclude it.
    auto [u, v] = scan.flank(Rat(1), make_rat(Int(1), Int(2)), Rat(2), on_unit);

    // Outer and inner Cauchy bounds, padded so the boundary radii are
    // certainly root-free.
    std::size_t deg = static_cast<std::size_t>(q.degree());
    Rat outer = Rat(2) + sum_abs_ratio(q, deg);
    Rat inner = Rat(1) / (Rat(2) + sum_abs_ratio(q, 0));

    std::deque<Segment> work;
    work.push_back({inner, u, scan.inside(u)});
    if (v < outer) work.push_back({v, outer, deg - scan.inside(v)});
    scan.bisect(std::move(work), out);
  }

  if (unit_count > 0) out.push_back({Rat(1), Rat(1), true, unit_count});
  std::sort(out.begin(), out.end(),
            [](const ModulusInterval& a, const ModulusInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace mahler
