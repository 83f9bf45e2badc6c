#include "mahler/semigroup.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "mahler/cyclotomic.hpp"
#include "mahler/error.hpp"

namespace mahler {

namespace {

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t p = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<Rat>(p, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& x) {
  std::vector<Rat> y(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (m[i][j] != 0 && x[j] != 0) y[i] += m[i][j] * x[j];
    }
  }
  return y;
}

RatMatrix mat_inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(ErrorKind::InternalError, "singular basis-change matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat lead = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Rat> flatten(const RatMatrix& m) {
  std::vector<Rat> out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

struct EchelonBasis {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> pivots;

  void reduce(std::vector<Rat>& x) const {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Rat f = x[pivots[j]];
      if (f == 0) continue;
      for (std::size_t t = 0; t < x.size(); ++t) x[t] -= f * rows[j][t];
    }
  }

  bool contains(std::vector<Rat> x) const {
    reduce(x);
    return std::all_of(x.begin(), x.end(), [](const Rat& r) { return r == 0; });
  }

  bool insert(std::vector<Rat> x) {
    reduce(x);
    std::size_t lead = 0;
    while (lead < x.size() && x[lead] == 0) ++lead;
    if (lead == x.size()) return false;
    Rat inv = 1 / x[lead];
    for (auto& t : x) t *= inv;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Rat f = rows[j][lead];
      if (f == 0) continue;
      for (std::size_t t = 0; t < x.size(); ++t) rows[j][t] -= f * x[t];
    }
    rows.push_back(std::move(x));
    pivots.push_back(lead);
    return true;
  }
};

// Basis of {x : m x = 0} as column vectors.
std::vector<std::vector<Rat>> null_space(const RatMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    Rat lead = a[rank][col];
    for (std::size_t j = 0; j < cols; ++j) a[rank][j] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t col = 0; col < cols; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) {
      continue;
    }
    std::vector<Rat> x(cols, Rat(0));
    x[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][col];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<Rat>> column_space(const RatMatrix& m) {
  EchelonBasis b;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::vector<Rat>> out;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rat> col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
    if (b.insert(col)) out.push_back(std::move(col));
  }
  return out;
}

Rat horner(const Polynomial& p, const Rat& x) {
  Rat acc(0);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// All positive divisors, truncated at a budget: the caller treats the list
// as candidates, so truncation only narrows the search.
std::vector<Int> divisors_of(const Int& n, std::size_t budget) {
  Int a = abs(n);
  if (a == 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64) return {Int(1)};
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factor_integer(a)) {
    std::size_t have = out.size();
    Int pw(1);
    for (unsigned long i = 1; i <= e && out.size() < budget; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < have && out.size() < budget; ++j) {
        out.push_back(out[j] * pw);
      }
    }
  }
  return out;
}

std::vector<Rat> find_rational_roots(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  Int den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Int> c;
  for (const auto& x : p.coeffs()) {
    Rat scaled = x * Rat(den);
    c.push_back(scaled.get_num());
  }
  std::set<Rat> roots;
  std::size_t v = 0;
  while (v < c.size() && c[v] == 0) ++v;
  if (v > 0) roots.insert(Rat(0));
  if (v + 1 >= c.size()) return {roots.begin(), roots.end()};
  for (const Int& a : divisors_of(c[v], 64)) {
    for (const Int& b : divisors_of(c.back(), 64)) {
      Rat r = Rat(a) / Rat(b);
      if (horner(p, r) == 0) roots.insert(r);
      if (horner(p, -r) == 0) roots.insert(-r);
    }
  }
  return {roots.begin(), roots.end()};
}

struct Walk {
  ClosureResult res;
  std::vector<std::size_t> depth;
  bool found_untame = false;
  std::size_t untame_index = 0;
};

// Breadth-first product closure; optionally tests every new element for
// tameness and stops at the first failure.
Walk run_walk(const std::vector<RatMatrix>& gens, std::size_t cap,
              std::size_t max_depth, bool test_tame) {
  Walk w;
  std::map<std::vector<Rat>, std::size_t> seen;
  auto try_insert = [&](RatMatrix m, std::size_t parent, unsigned long letter,
                        std::size_t d) -> bool {
    auto key = flatten(m);
    if (seen.find(key) != seen.end()) return true;
    if (w.res.elements.size() >= cap) {
      w.res.exceeded = true;
      return false;
    }
    std::size_t idx = w.res.elements.size();
    seen.emplace(std::move(key), idx);
    w.res.elements.push_back(std::move(m));
    w.res.parent.push_back(parent);
    w.res.letter.push_back(letter);
    w.depth.push_back(d);
    if (test_tame && !element_is_tame(w.res.elements[idx])) {
      w.found_untame = true;
      w.untame_index = idx;
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!try_insert(gens[i], kNoParent, static_cast<unsigned long>(i), 1)) {
      return w;
    }
  }
  for (std::size_t head = 0; head < w.res.elements.size(); ++head) {
    if (w.depth[head] >= max_depth) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      RatMatrix prod = mat_mul(w.res.elements[head], gens[j]);
      if (!try_insert(std::move(prod), head, static_cast<unsigned long>(j),
                      w.depth[head] + 1)) {
        return w;
      }
    }
  }
  return w;
}

}  // namespace

std::vector<unsigned long> ClosureResult::word_of(std::size_t index) const {
  std::vector<unsigned long> w;
  while (index != kNoParent) {
    w.push_back(letter[index]);
    index = parent[index];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Polynomial char_poly(const RatMatrix& m) {
  const std::size_t d = m.size();
  std::vector<Rat> coeffs(d + 1, Rat(0));
  coeffs[d] = 1;
  RatMatrix a;
  for (std::size_t j = 1; j <= d; ++j) {
    if (j == 1) {
      a = m;
    } else {
      for (std::size_t i = 0; i < d; ++i) a[i][i] += coeffs[d - j + 1];
      a = mat_mul(m, a);
    }
    Rat tr(0);
    for (std::size_t i = 0; i < d; ++i) tr += a[i][i];
    coeffs[d - j] = -tr / Rat(static_cast<long>(j));
  }
  return Polynomial(std::move(coeffs));
}

bool element_is_tame(const RatMatrix& m) {
  return unit_root_split(char_poly(m)).remainder.is_constant();
}

ClosureResult bfs_closure(const SemigroupTask& task) {
  return run_walk(task.generators, task.closure_cap,
                  static_cast<std::size_t>(-1), false)
      .res;
}

Decomposition invariant_decomposition(const SemigroupTask& task) {
  const std::size_t d = task.dim;
  Decomposition out;
  if (d == 0) {
    out.kind = Decomposition::Kind::Irreducible;
    out.blocks = {task.generators};
    return out;
  }

  // Saturate the span of the unital algebra generated by the digit matrices.
  std::vector<RatMatrix> kept;
  EchelonBasis span;
  std::vector<RatMatrix> work{identity_matrix(d)};
  for (const auto& g : task.generators) work.push_back(g);
  for (std::size_t head = 0; head < work.size(); ++head) {
    if (!span.insert(flatten(work[head]))) continue;
    kept.push_back(work[head]);
    for (const auto& g : task.generators) {
      work.push_back(mat_mul(work[head], g));
    }
  }
  out.algebra_dim = kept.size();
  if (out.algebra_dim == d * d) {
    out.kind = Decomposition::Kind::Irreducible;
    out.blocks = {task.generators};
    return out;
  }

  std::vector<std::vector<std::vector<Rat>>> candidates;
  for (std::size_t i = 0; i < d; ++i) {
    EchelonBasis orbit;
    std::vector<std::vector<Rat>> vecs;
    for (const auto& m : kept) {
      std::vector<Rat> col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = m[r][i];
      if (orbit.insert(col)) vecs.push_back(std::move(col));
    }
    candidates.push_back(std::move(vecs));
  }
  for (const auto& m : kept) {
    candidates.push_back(null_space(m));
    candidates.push_back(column_space(m));
    for (const Rat& lambda : find_rational_roots(char_poly(m))) {
      RatMatrix shifted = m;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] -= lambda;
      candidates.push_back(null_space(shifted));
    }
  }

  const std::vector<std::vector<Rat>>* best = nullptr;
  for (const auto& cand : candidates) {
    if (cand.empty() || cand.size() >= d) continue;
    if (best != nullptr && best->size() <= cand.size()) continue;
    EchelonBasis w;
    for (const auto& b : cand) w.insert(b);
    bool invariant = true;
    for (const auto& g : task.generators) {
      for (const auto& b : cand) {
        if (!w.contains(mat_vec(g, b))) {
          invariant = false;
          break;
        }
      }
      if (!invariant) break;
    }
    if (invariant) best = &cand;
  }
  if (best == nullptr) {
    out.kind = Decomposition::Kind::NoneFound;
    out.blocks = {task.generators};
    return out;
  }

  // Adapted basis: the invariant subspace first, then a greedy completion.
  const std::size_t w = best->size();
  std::vector<std::vector<Rat>> columns = *best;
  EchelonBasis rank;
  for (const auto& b : columns) rank.insert(b);
  for (std::size_t e = 0; e < d && columns.size() < d; ++e) {
    std::vector<Rat> x(d, Rat(0));
    x[e] = 1;
    if (rank.insert(x)) columns.push_back(std::move(x));
  }
  RatMatrix t_mat(d, std::vector<Rat>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) t_mat[i][j] = columns[j][i];
  }
  RatMatrix t_inv = mat_inverse(t_mat);

  std::vector<RatMatrix> sub_gens, quo_gens;
  for (const auto& g : task.generators) {
    RatMatrix conj = mat_mul(t_inv, mat_mul(g, t_mat));
    for (std::size_t i = w; i < d; ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        if (conj[i][j] != 0) {
          fail(ErrorKind::InternalError,
               "conjugated generator is not block triangular");
        }
      }
    }
    RatMatrix a(w, std::vector<Rat>(w));
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t j = 0; j < w; ++j) a[i][j] = conj[i][j];
    }
    RatMatrix c(d - w, std::vector<Rat>(d - w));
    for (std::size_t i = w; i < d; ++i) {
      for (std::size_t j = w; j < d; ++j) c[i - w][j - w] = conj[i][j];
    }
    sub_gens.push_back(std::move(a));
    quo_gens.push_back(std::move(c));
  }

  SemigroupTask sub_task{sub_gens, w, task.closure_cap, task.depth_cap};
  SemigroupTask quo_task{quo_gens, d - w, task.closure_cap, task.depth_cap};
  Decomposition sub = invariant_decomposition(sub_task);
  Decomposition quo = invariant_decomposition(quo_task);

  out.kind = Decomposition::Kind::Chain;
  auto lift = [&](const std::vector<Rat>& y, std::size_t offset) {
    std::vector<Rat> x(d, Rat(0));
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) x[i] += t_mat[i][offset + j] * y[j];
    }
    return x;
  };
  for (const auto& s : sub.chain) {
    std::vector<std::vector<Rat>> mapped;
    for (const auto& y : s) mapped.push_back(lift(y, 0));
    out.chain.push_back(std::move(mapped));
  }
  out.chain.push_back(*best);
  for (const auto& s : quo.chain) {
    std::vector<std::vector<Rat>> mapped = *best;
    for (const auto& y : s) mapped.push_back(lift(y, w));
    out.chain.push_back(std::move(mapped));
  }
  out.blocks = std::move(sub.blocks);
  for (auto& b : quo.blocks) out.blocks.push_back(std::move(b));
  return out;
}

SemigroupVerdict analyze_semigroup(const SemigroupTask& task) {
  auto replay = [&](const std::vector<unsigned long>& word)
      -> std::optional<SemigroupVerdict> {
    RatMatrix prod = task.generators[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      prod = mat_mul(prod, task.generators[word[i]]);
    }
    if (element_is_tame(prod)) return std::nullopt;
    SemigroupVerdict v;
    v.kind = VerdictKind::NotTame;
    v.witness = word;
    return v;
  };

  Walk top = run_walk(task.generators, task.closure_cap,
                      static_cast<std::size_t>(-1), true);
  if (top.found_untame) {
    if (auto v = replay(top.res.word_of(top.untame_index))) return *v;
  }
  if (!top.res.exceeded && !top.found_untame) {
    SemigroupVerdict v;
    v.kind = VerdictKind::Finite;
    v.cardinality = top.res.elements.size();
    return v;
  }

  Decomposition dec = invariant_decomposition(task);
  if (dec.kind == Decomposition::Kind::Chain) {
    bool all_finite = true;
    for (const auto& block : dec.blocks) {
      Walk bw = run_walk(block, task.closure_cap,
                         static_cast<std::size_t>(-1), true);
      if (bw.found_untame) {
        if (auto v = replay(bw.res.word_of(bw.untame_index))) return *v;
        all_finite = false;
      } else if (bw.res.exceeded) {
        all_finite = false;
      }
    }
    if (all_finite) {
      SemigroupVerdict v;
      v.kind = VerdictKind::TameNotFinite;
      return v;
    }
  }

  Walk deep = run_walk(task.generators, 2 * task.closure_cap, task.depth_cap,
                       true);
  if (deep.found_untame) {
    if (auto v = replay(deep.res.word_of(deep.untame_index))) return *v;
  }
  SemigroupVerdict v;
  v.kind = VerdictKind::Inconclusive;
  for (std::size_t i = 0; i < deep.depth.size(); ++i) {
    v.depth = std::max(v.depth, deep.depth[i]);
  }
  v.reason = "every product through depth " + std::to_string(v.depth) +
             " is tame and the closure exceeded its cap";
  return v;
}

}  // namespace mahler
