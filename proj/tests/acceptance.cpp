// Acceptance gate: one line per criterion, pinned tolerances, nonzero exit on
// any failure. Each body is self-contained and rebuilds its own oracles.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mahler/classify.hpp"
#include "mahler/compile.hpp"
#include "mahler/cyclotomic.hpp"
#include "mahler/equation.hpp"
#include "mahler/error.hpp"
#include "mahler/expand.hpp"
#include "mahler/linrep.hpp"
#include "mahler/newton_polygon.hpp"
#include "mahler/parse.hpp"
#include "mahler/polynomial.hpp"
#include "mahler/rational.hpp"
#include "mahler/semigroup.hpp"
#include "mahler/series_spec.hpp"
#include "mahler/zoo.hpp"

using namespace mahler;

namespace {

Rat R(long n, long d = 1) { return Rat(n, d); }

std::vector<Rat> V(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.push_back(R(x));
  return v;
}

RatMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m;
  for (const auto& row : rows) {
    m.emplace_back();
    for (long x : row) m.back().push_back(R(x));
  }
  return m;
}

std::uint64_t lcg_state = 814;
std::uint64_t rnd() {
  lcg_state = lcg_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return lcg_state >> 33;
}

// Pinned coefficient alphabet for the randomized oracles.
Rat pinned_entry() {
  switch (rnd() % 4) {
    case 0: return R(-1);
    case 1: return R(0);
    case 2: return R(1, 2);
    default: return R(1);
  }
}

LinearRepresentation random_rep(std::size_t dim) {
  LinearRepresentation rep;
  rep.k = 2;
  rep.u.assign(dim, R(0));
  rep.v.assign(dim, R(0));
  rep.mu.assign(2, RatMatrix(dim, std::vector<Rat>(dim)));
  for (std::size_t i = 0; i < dim; ++i) {
    rep.v[i] = pinned_entry();
    for (std::size_t j = 0; j < dim; ++j) {
      rep.mu[0][i][j] = pinned_entry();
      rep.mu[1][i][j] = pinned_entry();
    }
  }
  // Zero-digit invariance: start in e_1 and make mu(0) reproduce it.
  rep.u[0] = R(1);
  for (std::size_t j = 0; j < dim; ++j) rep.mu[0][0][j] = (j == 0) ? R(1) : R(0);
  return rep;
}

std::vector<unsigned long> digits_of(unsigned long long n, unsigned long k) {
  std::vector<unsigned long> d;
  while (n > 0) {
    d.insert(d.begin(), static_cast<unsigned long>(n % k));
    n /= k;
  }
  return d;
}

Rat eval_word(const LinearRepresentation& rep, const std::vector<unsigned long>& w) {
  std::vector<Rat> x = rep.u;
  for (unsigned long d : w) {
    std::vector<Rat> y(rep.dim(), Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * rep.mu[d][i][j];
    }
    x = std::move(y);
  }
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * rep.v[i];
  return s;
}

std::size_t rat_matrix_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[rank], m[pr]);
    Rat inv = Rat(1) / m[rank][c];
    for (std::size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Wraps a transformed equation of the same series as a validated spec, with
// seeds drawn from the source expansion.
SeriesSpec derived_spec(const MahlerEquation& raw, const SeriesSpec& source) {
  MahlerEquation norm = normalize_equation(raw);
  return make_spec(norm, expand(source, norm.coeffs[0].valuation()));
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

char fmt_buf[256];

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  std::snprintf(fmt_buf, sizeof fmt_buf, pattern, a, b, c);
  return fmt_buf;
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](int id, const char* label, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-24s %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", id, label,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failures;
  };

  run(1, "zoo golden table", [] {
    const std::size_t n = 65536;
    std::size_t good = 0, agreed = 0, total = 0;
    std::string classes;
    for (const std::string& name : zoo_names()) {
      ZooEntry entry = zoo(name, 0);
      ClassificationReport report = classify(entry.spec, n);
      int got = static_cast<int>(report.value);
      ++total;
      agreed += report.agreement ? 1 : 0;
      bool expected_ok = name == "denominator_trap" ? (got != 1 && got != 2)
                                                    : got == entry.expected_class;
      good += expected_ok ? 1 : 0;
      classes += (classes.empty() ? "" : ",") + name.substr(0, 4) + "=" + std::to_string(got);
    }
    Outcome o;
    o.ok = good == total && agreed == total;
    o.detail = "n=65536 " + classes + " agreed=" + std::to_string(agreed) + "/8";
    return o;
  });

  run(2, "partition constant", [] {
    const std::size_t n = 65536;
    std::vector<double> h = height_sequence(expand(zoo("prod_inv_cyclo", 0).spec, n));
    double ratio = h[n] / std::pow(std::log(double(n)), 2.0);
    double c = 1.0 / (2.0 * std::log(2.0));
    Outcome o;
    o.ok = ratio >= 0.5 * c && ratio <= 1.1 * c;
    o.detail = fmt("log a_n / log^2 n = %.4f, band [%.4f, %.4f]", ratio, 0.5 * c, 1.1 * c);
    return o;
  });

  run(3, "doubling slope", [] {
    std::vector<double> h = height_sequence(expand(zoo("geometric", 0).spec, std::size_t(1) << 14));
    EmpiricalClassification emp = classify_empirical(h, 2);
    double slope = 0.0;
    const std::size_t windows = emp.window_max.size();
    for (std::size_t j = windows - 4; j < windows; ++j) {
      slope += emp.window_max[j] / (std::pow(2.0, double(j) + 1.0) - 1.0) / 4.0;
    }
    Outcome o;
    o.ok = emp.value == GrowthClass::C1Linear && std::abs(slope / std::log(2.0) - 1.0) <= 0.1;
    o.detail = fmt("last-4-window slope %.5f vs log 2 = %.5f (10%% band)", slope, std::log(2.0));
    return o;
  });

  run(4, "compiler equivalence", [] {
    std::size_t checked = 0;
    bool all = true;
    auto verify = [&](const SeriesSpec& spec, const std::vector<Rat>& want) {
      LinearRepresentation rep = regular_compile(spec);
      for (unsigned long long i = 0; i <= 2000; ++i) {
        if (eval_linrep(rep, i) != want[i]) {
          all = false;
          return;
        }
      }
      ++checked;
    };
    for (const std::string& name :
         {std::string("neg_product"), std::string("thin_geometric"), std::string("digit_sum"),
          std::string("thue_morse"), std::string("stern")}) {
      SeriesSpec spec = zoo(name, 0).spec;
      verify(spec, expand(spec, 2000));
    }
    SeriesSpec trap = zoo("denominator_trap", 0).spec;
    std::vector<Rat> want = expand(trap, 2000);
    verify(derived_spec(to_mahler(iterate_equation(trap.equation, 2)), trap), want);
    Outcome o;
    o.ok = all && checked == 6;
    o.detail = "6 regular equations, eval == expansion for n <= 2000";
    return o;
  });

  run(5, "convolution oracles", [] {
    std::size_t pairs = 0;
    for (int trial = 0; trial < 50; ++trial) {
      LinearRepresentation a = random_rep(1 + rnd() % 3);
      LinearRepresentation b = random_rep(1 + rnd() % 3);
      std::vector<Rat> av, bv;
      for (unsigned long long i = 0; i <= 256; ++i) {
        av.push_back(eval_linrep(a, i));
        bv.push_back(eval_linrep(b, i));
      }
      LinearRepresentation cauchy = cauchy_convolution(a, b);
      LinearRepresentation word = word_convolution(a, b);
      for (unsigned long long i = 0; i <= 256; ++i) {
        Rat sum(0);
        for (unsigned long long j = 0; j <= i; ++j) sum += av[j] * bv[i - j];
        if (eval_linrep(cauchy, i) != sum) return Outcome{false, "cauchy mismatch"};
        std::vector<unsigned long> w = digits_of(i, 2);
        Rat split(0);
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          std::vector<unsigned long> pre(w.begin(), w.begin() + cut);
          std::vector<unsigned long> suf(w.begin() + cut, w.end());
          split += eval_word(a, pre) * eval_word(b, suf);
        }
        if (eval_linrep(word, i) != split) return Outcome{false, "word-split mismatch"};
      }
      ++pairs;
    }
    return Outcome{pairs == 50, "50 random pairs, dim <= 3, entries {-1,0,1/2,1}, n <= 256"};
  });

  run(6, "minimization", [] {
    std::vector<std::vector<unsigned long>> words{{}};
    for (std::size_t head = 0; words.size() < 64; ++head) {
      for (unsigned long d = 0; d < 2; ++d) {
        auto w = words[head];
        w.push_back(d);
        words.push_back(std::move(w));
      }
    }
    words.resize(64);
    for (int trial = 0; trial < 30; ++trial) {
      LinearRepresentation rep = random_rep(1 + rnd() % 4);
      LinearRepresentation min = minimize_linrep(rep);
      std::vector<std::vector<Rat>> h(64, std::vector<Rat>(64));
      for (std::size_t i = 0; i < 64; ++i) {
        for (std::size_t j = 0; j < 64; ++j) {
          auto w = words[i];
          w.insert(w.end(), words[j].begin(), words[j].end());
          h[i][j] = eval_word(rep, w);
        }
      }
      if (min.dim() != rat_matrix_rank(h)) return Outcome{false, "rank mismatch"};
      for (unsigned long long n = 0; n <= 10000; ++n) {
        if (eval_linrep(min, n) != eval_linrep(rep, n)) return Outcome{false, "eval drift"};
      }
    }
    return Outcome{true, "30 reps: dim == Hankel rank @64, eval exact to 10^4"};
  });

  run(7, "semigroup verdicts", [] {
    auto timed = [](const std::function<SemigroupVerdict()>& f)
        -> std::pair<SemigroupVerdict, double> {
      auto t0 = std::chrono::steady_clock::now();
      SemigroupVerdict v = f();
      return {v, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    };
    auto task_for = [](const LinearRepresentation& rep) {
      SemigroupTask t;
      t.generators = rep.mu;
      t.dim = rep.dim();
      t.closure_cap = 20000;
      t.depth_cap = 16;
      return t;
    };
    auto [tm, tm_s] = timed([&] {
      return analyze_semigroup(task_for(regular_compile(zoo("thue_morse", 0).spec)));
    });
    auto [ds, ds_s] = timed([&] {
      return analyze_semigroup(task_for(regular_compile(zoo("digit_sum", 0).spec)));
    });
    SemigroupTask doubling;
    doubling.generators = {M({{1}}), M({{2}})};
    doubling.dim = 1;
    doubling.closure_cap = 1000;
    doubling.depth_cap = 8;
    auto [nt, nt_s] = timed([&] { return analyze_semigroup(doubling); });
    bool witness_ok = false;
    if (nt.kind == VerdictKind::NotTame && !nt.witness.empty()) {
      RatMatrix prod = doubling.generators[nt.witness[0]];
      for (std::size_t i = 1; i < nt.witness.size(); ++i) {
        RatMatrix next(1, std::vector<Rat>(1, prod[0][0] * doubling.generators[nt.witness[i]][0][0]));
        prod = next;
      }
      UnitRootSplit split = unit_root_split(char_poly(prod));
      witness_ok = split.remainder.degree() >= 1;
    }
    Outcome o;
    o.ok = tm.kind == VerdictKind::Finite && tm.cardinality == 2 &&
           ds.kind == VerdictKind::TameNotFinite && witness_ok && tm_s < 5.0 &&
           ds_s < 5.0 && nt_s < 5.0;
    o.detail = fmt("Finite(2) %.2fs / TameNotFinite %.2fs / NotTame witness %.2fs", tm_s, ds_s, nt_s);
    return o;
  });

  run(8, "iteration fidelity", [] {
    SteppedEquation stepped = iterate_equation(zoo("denominator_trap", 0).spec.equation, 2);
    Polynomial displayed =
        parse_polynomial("(z - 1/8)*(z^2 + 1/2*z + 1/4)*(z^9 - 1/2)");
    Outcome o;
    o.ok = stepped.start == 2 && stepped.coeffs.size() == 2 &&
           stepped.coeffs[0] == Polynomial::one() &&
           stepped.coeffs[1] == displayed * R(64);
    o.detail = "base-9 relation q0 = 1, q1 = 64 (z-1/8)(z^2+z/2+1/4)(z^9-1/2)";
    return o;
  });

  run(9, "residual invariant", [] {
    std::size_t specs = 0;
    for (const std::string& name : zoo_names()) {
      SeriesSpec spec = zoo(name, 0).spec;
      std::vector<SeriesSpec> all{spec,
                                  derived_spec(to_mahler(iterate_equation(spec.equation, 2)), spec),
                                  derived_spec(rebase_relation(spec.equation, 2), spec),
                                  shift_spec(spec).shifted};
      for (const SeriesSpec& s : all) {
        if (residual_order(s, 10000).has_value()) {
          return Outcome{false, name + ": residual appeared below 10^4"};
        }
        ++specs;
      }
    }
    return Outcome{true, std::to_string(specs) + " specs (catalog + iterated/rebased/shifted) clean to 10^4"};
  });

  run(10, "module properties", [] {
    // Height symmetry h(r) = h(1/r) on 200 nonzero rationals.
    for (int i = 0; i < 200; ++i) {
      Rat r = Rat(long(rnd() % 4000) - 2000, long(1 + rnd() % 300));
      if (r == 0) continue;
      double a = height_sequence({r})[0];
      double b = height_sequence({Rat(1) / r})[0];
      if (std::abs(a - b) > 1e-12) return Outcome{false, "height symmetry broke"};
    }
    // Cyclotomic split reconstruction on 20 assembled products.
    for (int i = 0; i < 20; ++i) {
      Polynomial p = Polynomial::one().times_power(rnd() % 3);
      p = p * cyclotomic_polynomial(1 + rnd() % 12);
      p = p * cyclotomic_polynomial(1 + rnd() % 12);
      p = p * Polynomial({R(3), R(1), R(0), R(2)});
      if (unit_root_split(p).reassemble() != p) return Outcome{false, "split reconstruction broke"};
    }
    // Newton-polygon valuations recover planted 2-adic root sizes, 15 rounds.
    for (int i = 0; i < 15; ++i) {
      long a = 1 + long(rnd() % 4), b = 1 + long(rnd() % 4);
      Polynomial planted = Polynomial({R(-(1L << a)), R(1)}) * Polynomial({R(-(1L << b)), R(1)}) *
                           Polynomial({R(-3), R(1)});
      std::size_t matched = 0;
      for (const auto& [w, count] : padic_root_valuations(planted, Int(2))) {
        if (w == Rat(a)) matched += count;
        if (w == Rat(b) && b != a) matched += count;
      }
      if (matched != 2) return Outcome{false, "newton valuations broke"};
    }
    // Leading zero digits never change a value, over assorted constructions.
    MahlerEquation stern_eq;
    stern_eq.k = 2;
    stern_eq.coeffs = {Polynomial::one(), -Polynomial({R(1), R(1), R(1)})};
    std::vector<LinearRepresentation> reps;
    reps.push_back(regular_compile(zoo("thue_morse", 0).spec));
    reps.push_back(becker_to_linrep(stern_eq, R(1)));
    reps.push_back(linrep_of_polynomial(Polynomial({R(2), R(-1), R(0), R(5)}), 3));
    for (int i = 0; i < 10; ++i) reps.push_back(random_rep(1 + rnd() % 4));
    for (const auto& rep : reps) {
      for (unsigned long long n = 0; n <= 40; ++n) {
        auto w = digits_of(n, rep.k);
        w.insert(w.begin(), 3, 0);
        if (eval_word(rep, w) != eval_linrep(rep, n)) return Outcome{false, "zero padding broke"};
      }
    }
    // Conjugating by an invertible change of basis preserves values and the
    // minimized dimension, 10 rounds.
    auto mul3 = [](const RatMatrix& a, const RatMatrix& b) {
      RatMatrix out(3, std::vector<Rat>(3, Rat(0)));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t l = 0; l < 3; ++l) {
          if (a[i][l] == 0) continue;
          for (std::size_t j = 0; j < 3; ++j) out[i][j] += a[i][l] * b[l][j];
        }
      }
      return out;
    };
    for (int i = 0; i < 10; ++i) {
      LinearRepresentation rep = random_rep(3);
      // T = I + c E_{21} fixes e_1, so the conjugate keeps the start vector
      // and the zero-digit invariance.
      Rat c = pinned_entry();
      RatMatrix t = M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
      RatMatrix tinv = t;
      t[1][0] = c;
      tinv[1][0] = -c;
      LinearRepresentation conj = rep;
      for (std::size_t d = 0; d < 2; ++d) conj.mu[d] = mul3(tinv, mul3(rep.mu[d], t));
      for (std::size_t j = 0; j < 3; ++j) {
        conj.u[j] = rep.u[0] * t[0][j] + rep.u[1] * t[1][j] + rep.u[2] * t[2][j];
        conj.v[j] = tinv[j][0] * rep.v[0] + tinv[j][1] * rep.v[1] + tinv[j][2] * rep.v[2];
      }
      if (minimize_linrep(conj).dim() != minimize_linrep(rep).dim()) {
        return Outcome{false, "conjugation changed the minimal dimension"};
      }
      for (unsigned long long n = 0; n <= 200; ++n) {
        if (eval_linrep(conj, n) != eval_linrep(rep, n)) {
          return Outcome{false, "conjugation changed a value"};
        }
      }
    }
    return Outcome{true, "height symmetry 200, splits 20, polygons 15, zero-padding 13 reps, conjugation 10"};
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
