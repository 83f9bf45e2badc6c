#include <cstddef>
#include <utility>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/linrep.hpp"

namespace mahler {

namespace {

RatMatrix identity(std::size_t n) {
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

// Gauss-Jordan inverse; the callers only invert matrices built to be
// invertible, so a zero pivot is an internal error.
RatMatrix mat_inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv = identity(n);
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

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  RatMatrix c(n * m, std::vector<Rat>(n * m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t t = 0; t < m; ++t) {
          c[i * m + j][l * m + t] = a[i][l] * b[j][t];
        }
      }
    }
  }
  return c;
}

struct SelectorForm {
  bool zero = false;           // the represented series is identically zero
  std::vector<Rat> a;          // start vector in the new coordinates
  std::vector<RatMatrix> mu;   // digit matrices; the output vector is e_1
};

// Change basis so the output vector becomes the first standard basis vector:
// T has v as its first column, so value(w) = (u T) (T^-1 mu(w) T) e_1.
SelectorForm to_selector_form(const LinearRepresentation& rep) {
  SelectorForm out;
  const std::size_t d = rep.dim();
  bool v_zero = true;
  for (const auto& x : rep.v) {
    if (x != 0) v_zero = false;
  }
  if (d == 0 || v_zero) {
    out.zero = true;
    return out;
  }
  std::vector<std::vector<Rat>> cols{rep.v};
  // Complete to a basis with standard vectors, tracking independence through
  // a running elimination.
  std::vector<std::vector<Rat>> reduced{rep.v};
  std::vector<std::size_t> pivots;
  {
    std::size_t lead = 0;
    while (reduced[0][lead] == 0) ++lead;
    Rat inv = 1 / reduced[0][lead];
    for (auto& x : reduced[0]) x *= inv;
    pivots.push_back(lead);
  }
  for (std::size_t e = 0; e < d && cols.size() < d; ++e) {
    std::vector<Rat> x(d, Rat(0));
    x[e] = 1;
    std::vector<Rat> r = x;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (r[pivots[j]] == 0) continue;
      Rat f = r[pivots[j]];
      for (std::size_t t = 0; t < d; ++t) r[t] -= f * reduced[j][t];
    }
    std::size_t lead = 0;
    while (lead < d && r[lead] == 0) ++lead;
    if (lead == d) continue;
    Rat inv = 1 / r[lead];
    for (auto& t : r) t *= inv;
    reduced.push_back(std::move(r));
    pivots.push_back(lead);
    cols.push_back(std::move(x));
  }
  RatMatrix t_mat(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) t_mat[i][j] = cols[j][i];
  }
  RatMatrix t_inv = mat_inverse(t_mat);
  out.a.assign(d, Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) out.a[j] += rep.u[i] * t_mat[i][j];
  }
  out.mu.reserve(rep.mu.size());
  for (const auto& m : rep.mu) {
    out.mu.push_back(mat_mul(t_inv, mat_mul(m, t_mat)));
  }
  return out;
}

// Embed into a larger dimension with zero padding; the start and digit
// matrices gain inert coordinates and the output vector stays e_1.
void pad_selector_form(SelectorForm& f, std::size_t d) {
  const std::size_t old = f.a.size();
  if (old == d) return;
  f.a.resize(d, Rat(0));
  for (auto& m : f.mu) {
    for (auto& row : m) row.resize(d, Rat(0));
    m.resize(d, std::vector<Rat>(d, Rat(0)));
  }
}

}  // namespace

LinearRepresentation cauchy_convolution(const LinearRepresentation& a,
                                        const LinearRepresentation& b) {
  if (a.k != b.k) {
    fail(ErrorKind::RadixMismatch,
         "representations have radices " + std::to_string(a.k) + " and " +
             std::to_string(b.k));
  }
  const unsigned long k = a.k;
  SelectorForm ca = to_selector_form(a);
  SelectorForm cb = to_selector_form(b);
  if (ca.zero || cb.zero) return linrep_of_polynomial(Polynomial::zero(), k);
  const std::size_t d = std::max(ca.a.size(), cb.a.size());
  pad_selector_form(ca, d);
  pad_selector_form(cb, d);

  // State (x, x') where, over all length-|w| splits n = p + q, x accumulates
  // the digit sums landing exactly on w and x' those overflowing by one
  // (the pending carry). Reading digit r refines both.
  const std::size_t dd = d * d;
  const std::size_t dim = 2 * dd;
  auto kap = [&](long s) -> const RatMatrix* {
    if (s < 0 || s >= static_cast<long>(k)) return nullptr;
    return &ca.mu[static_cast<std::size_t>(s)];
  };
  auto lam = [&](long s) -> const RatMatrix* {
    if (s < 0 || s >= static_cast<long>(k)) return nullptr;
    return &cb.mu[static_cast<std::size_t>(s)];
  };
  auto add_block = [&](RatMatrix& m, std::size_t row0, std::size_t col0,
                       long s, long t) {
    const RatMatrix* x = kap(s);
    const RatMatrix* y = lam(t);
    if (x == nullptr || y == nullptr) return;
    RatMatrix prod = kron(*x, *y);
    for (std::size_t i = 0; i < dd; ++i) {
      for (std::size_t j = 0; j < dd; ++j) m[row0 + i][col0 + j] += prod[i][j];
    }
  };

  LinearRepresentation out;
  out.k = k;
  out.mu.assign(k, RatMatrix(dim, std::vector<Rat>(dim, Rat(0))));
  for (unsigned long r = 0; r < k; ++r) {
    RatMatrix& m = out.mu[r];
    const long lr = static_cast<long>(r);
    const long lk = static_cast<long>(k);
    for (long s = 0; s <= lr; ++s) add_block(m, 0, 0, s, lr - s);
    for (long s = 0; s <= lr - 1; ++s) add_block(m, 0, dd, s, lr - 1 - s);
    for (long s = lr + 1; s < lk; ++s) add_block(m, dd, 0, s, lk + lr - s);
    for (long s = lr; s < lk; ++s) add_block(m, dd, dd, s, lk + lr - 1 - s);
  }
  out.u.assign(dim, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (ca.a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) out.u[i * d + j] = ca.a[i] * cb.a[j];
  }
  out.v.assign(dim, Rat(0));
  out.v[0] = 1;
  return out;
}

LinearRepresentation word_convolution(const LinearRepresentation& a,
                                      const LinearRepresentation& b) {
  if (a.k != b.k) {
    fail(ErrorKind::RadixMismatch,
         "representations have radices " + std::to_string(a.k) + " and " +
             std::to_string(b.k));
  }
  const unsigned long k = a.k;
  const std::size_t da = a.dim(), db = b.dim();
  const std::size_t d = da + db;

  // State (x, y): x runs the left factor over the prefix read so far, y
  // accumulates, over every split point, the left value at the split times
  // the right factor run over the remaining digits.
  std::vector<Rat> u(d, Rat(0));
  Rat a_empty(0);
  for (std::size_t i = 0; i < da; ++i) a_empty += a.u[i] * a.v[i];
  for (std::size_t i = 0; i < da; ++i) u[i] = a.u[i];
  for (std::size_t j = 0; j < db; ++j) u[da + j] = a_empty * b.u[j];
  std::vector<Rat> v(d, Rat(0));
  for (std::size_t j = 0; j < db; ++j) v[da + j] = b.v[j];
  std::vector<RatMatrix> mu(k, RatMatrix(d, std::vector<Rat>(d, Rat(0))));
  for (unsigned long r = 0; r < k; ++r) {
    RatMatrix& m = mu[r];
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) m[i][j] = a.mu[r][i][j];
    }
    // New split directly after this digit: left value mu_a(r) v_a feeds the
    // right factor's start vector.
    for (std::size_t i = 0; i < da; ++i) {
      Rat step(0);
      for (std::size_t t = 0; t < da; ++t) step += a.mu[r][i][t] * a.v[t];
      if (step == 0) continue;
      for (std::size_t j = 0; j < db; ++j) m[i][da + j] = step * b.u[j];
    }
    for (std::size_t i = 0; i < db; ++i) {
      for (std::size_t j = 0; j < db; ++j) m[da + i][da + j] = b.mu[r][i][j];
    }
  }

  // The sum over split points depends on the word itself, not just its value,
  // so leading zeros would change the result. Wrap the machine so that digit
  // 0 is inert until the first nonzero digit arrives: the run then evaluates
  // the zero-stripped word.
  LinearRepresentation out;
  out.k = k;
  const std::size_t dim = 2 * d;
  out.u.assign(dim, Rat(0));
  for (std::size_t i = 0; i < d; ++i) out.u[i] = u[i];
  out.v.assign(dim, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    out.v[i] = v[i];
    out.v[d + i] = v[i];
  }
  out.mu.assign(k, RatMatrix(dim, std::vector<Rat>(dim, Rat(0))));
  for (std::size_t i = 0; i < d; ++i) {
    out.mu[0][i][i] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      out.mu[0][d + i][d + j] = mu[0][i][j];
    }
  }
  for (unsigned long r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        out.mu[r][i][d + j] = mu[r][i][j];
        out.mu[r][d + i][d + j] = mu[r][i][j];
      }
    }
  }
  return out;
}

}  // namespace mahler
