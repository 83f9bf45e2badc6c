#include "mahler/equation.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mahler/error.hpp"

namespace mahler {

namespace {

std::size_t checked_power(unsigned long base, unsigned long exp) {
  std::size_t result = 1;
  for (unsigned long i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::size_t>::max() / base) {
      fail(ErrorKind::PreconditionViolated,
           "substitution exponent " + std::to_string(base) + "^" +
               std::to_string(exp) + " does not fit a machine word");
    }
    result *= base;
  }
  return result;
}

// Coefficients of p sitting in exponents congruent to r mod k, re-read as a
// polynomial in z^k: sum over e ≡ r of p_e z^{(e-r)/k}.
Polynomial digit_layer(const Polynomial& p, unsigned long r, unsigned long k) {
  std::vector<Rat> out;
  for (std::size_t e = r; e < p.coeffs().size(); e += k) {
    out.resize((e - r) / k + 1, Rat(0));
    out.back() = p.coeff(e);
  }
  return Polynomial(std::move(out));
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  Polynomial l = *a.divide_exact(poly_gcd(a, b)) * b;
  return l * (Rat(1) / l.leading());
}

using Matrix = std::vector<std::vector<RationalFunction>>;

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RationalFunction(Rat(1));
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix out(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction s;
      for (std::size_t t = 0; t < n; ++t) {
        if (a[i][t].is_zero() || b[t][j].is_zero()) continue;
        s = s + a[i][t] * b[t][j];
      }
      out[i][j] = s;
    }
  }
  return out;
}

void require_normalized(const MahlerEquation& eq, const char* who) {
  if (eq.k < 2) {
    fail(ErrorKind::RadixMismatch, std::string(who) + ": radix must be at least 2");
  }
  if (eq.order() < 1 || eq.coeffs.front().is_zero() || eq.coeffs.back().is_zero()) {
    fail(ErrorKind::PreconditionViolated,
         std::string(who) + ": expects a normalized equation with nonzero ends and order >= 1");
  }
}

// Nontrivial dependence among the given length-`dim` columns, supported on a
// prefix ending at the first non-pivot column; empty when they are
// independent. Entries are padded to cols.size().
std::vector<RationalFunction> column_nullvector(
    const std::vector<std::vector<RationalFunction>>& cols, std::size_t dim) {
  std::size_t n = cols.size();
  Matrix m(dim, std::vector<RationalFunction>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = cols[j][i];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = row;
    while (pr < dim && m[pr][col].is_zero()) ++pr;
    if (pr == dim) {
      // Free column: back-substitute through the recorded pivots.
      std::vector<RationalFunction> x(n);
      x[col] = RationalFunction(Rat(1));
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [prow, pcol] = *it;
        RationalFunction s;
        for (std::size_t j = pcol + 1; j <= col; ++j) {
          if (!m[prow][j].is_zero() && !x[j].is_zero()) s = s + m[prow][j] * x[j];
        }
        x[pcol] = -(s / m[prow][pcol]);
      }
      return x;
    }
    std::swap(m[row], m[pr]);
    for (std::size_t rr = row + 1; rr < dim; ++rr) {
      if (m[rr][col].is_zero()) continue;
      RationalFunction factor = m[rr][col] / m[row][col];
      for (std::size_t j = col; j < n; ++j) {
        m[rr][j] = m[rr][j] - factor * m[row][j];
      }
    }
    pivots.emplace_back(row, col);
    ++row;
    if (row == dim) {
      // Remaining columns are all free; take the next one.
      if (col + 1 < n) {
        std::vector<RationalFunction> x(n);
        x[col + 1] = RationalFunction(Rat(1));
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
          auto [prow, pcol] = *it;
          RationalFunction s;
          for (std::size_t j = pcol + 1; j <= col + 1; ++j) {
            if (!m[prow][j].is_zero() && !x[j].is_zero()) s = s + m[prow][j] * x[j];
          }
          x[pcol] = -(s / m[prow][pcol]);
        }
        return x;
      }
      return {};
    }
  }
  return {};
}

// Multiplies through by the denominator lcm, returning polynomial
// coefficients with the same ratios.
std::vector<Polynomial> clear_denominators(const std::vector<RationalFunction>& v) {
  Polynomial l = Polynomial::one();
  for (const auto& r : v) {
    if (!r.is_zero()) l = poly_lcm(l, r.den());
  }
  std::vector<Polynomial> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out[i] = v[i].num() * *l.divide_exact(v[i].den());
  }
  return out;
}

}  // namespace

std::string MahlerEquation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[i].to_string() + ")*f" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

MahlerEquation normalize_equation(const MahlerEquation& eq) {
  if (eq.k < 2) {
    fail(ErrorKind::RadixMismatch, "radix must be at least 2, got " + std::to_string(eq.k));
  }
  std::vector<Polynomial> c = eq.coeffs;
  auto trim_trailing = [&c] {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  };
  trim_trailing();
  if (c.empty()) fail(ErrorKind::AllZero, "every coefficient of the equation is zero");

  // A zero p_0 is removed by splitting the relation into its base-k digit
  // layers: sum_i p_i(z) f(z^{k^i}) = 0 with all i >= 1 forces, for each
  // residue r, sum_i (layer_r p_i)(z) f(z^{k^{i-1}}) = 0. Any nonzero layer
  // is an equation of order one less.
  while (c.front().is_zero()) {
    std::size_t first = 0;
    while (c[first].is_zero()) ++first;
    unsigned long r = c[first].valuation() % eq.k;
    std::vector<Polynomial> next(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
      next[i - 1] = digit_layer(c[i], r, eq.k);
    }
    c = std::move(next);
    trim_trailing();
    if (c.size() <= 1) {
      fail(ErrorKind::InvalidEquation,
           "equation collapses to order zero, forcing the zero series");
    }
  }
  if (c.size() <= 1) {
    fail(ErrorKind::InvalidEquation,
         "equation has order zero, forcing the zero series");
  }

  Polynomial g;
  for (const auto& p : c) g = poly_gcd(g, p);
  if (g.degree() > 0 || g.valuation() > 0) {
    for (auto& p : c) {
      if (!p.is_zero()) p = *p.divide_exact(g);
    }
  }
  Rat scale = Rat(1) / c.front().lowest_coeff();
  for (auto& p : c) p = p * scale;
  return MahlerEquation{eq.k, std::move(c)};
}

SteppedEquation iterate_equation(const MahlerEquation& eq, unsigned long n0) {
  require_normalized(eq, "iterate_equation");
  if (n0 < 1) {
    fail(ErrorKind::PreconditionViolated, "iterate_equation: step count must be >= 1");
  }
  std::size_t d = eq.order();
  Matrix m = identity_matrix(d);
  std::size_t power = 1;
  for (unsigned long t = 0; t < n0; ++t) {
    Matrix a(d, std::vector<RationalFunction>(d));
    Polynomial p0 = eq.coeffs[0].substitute_power(power);
    for (std::size_t j = 0; j < d; ++j) {
      a[0][j] = RationalFunction(-eq.coeffs[j + 1].substitute_power(power), p0);
    }
    for (std::size_t i = 1; i < d; ++i) a[i][i - 1] = RationalFunction(Rat(1));
    m = multiply(m, a);
    if (t + 1 < n0) {
      if (power > std::numeric_limits<std::size_t>::max() / eq.k) {
        fail(ErrorKind::PreconditionViolated,
             "iterate_equation: k^n0 does not fit a machine word");
      }
      power *= eq.k;
    }
  }

  // f(z) = sum_j m[0][j] f(z^{k^{n0+j}}), then clear denominators.
  std::vector<RationalFunction> row(d + 1);
  row[0] = RationalFunction(Rat(1));
  for (std::size_t j = 0; j < d; ++j) row[j + 1] = m[0][j];
  std::vector<Polynomial> cleared = clear_denominators(row);

  Polynomial g;
  for (const auto& p : cleared) g = poly_gcd(g, p);
  if (g.degree() > 0 || g.valuation() > 0) {
    for (auto& p : cleared) {
      if (!p.is_zero()) p = *p.divide_exact(g);
    }
  }
  Rat scale = Rat(1) / cleared.front().lowest_coeff();
  for (auto& p : cleared) p = p * scale;

  SteppedEquation out;
  out.k = eq.k;
  out.start = n0;
  out.coeffs = std::move(cleared);
  return out;
}

MahlerEquation to_mahler(const SteppedEquation& eq) {
  if (eq.coeffs.size() < 2 || eq.start < 1) {
    fail(ErrorKind::InvalidEquation, "to_mahler: stepped equation needs a right-hand side");
  }
  MahlerEquation out;
  out.k = eq.k;
  out.coeffs.assign(eq.start + eq.coeffs.size() - 1, Polynomial::zero());
  out.coeffs[0] = eq.coeffs[0];
  for (std::size_t i = 1; i < eq.coeffs.size(); ++i) {
    out.coeffs[eq.start + i - 1] = -eq.coeffs[i];
  }
  return out;
}

MahlerEquation rebase_relation(const MahlerEquation& eq, unsigned long e) {
  require_normalized(eq, "rebase_relation");
  if (e < 1) {
    fail(ErrorKind::PreconditionViolated, "rebase_relation: exponent must be >= 1");
  }
  if (e == 1) return normalize_equation(eq);
  std::size_t d = eq.order();
  std::size_t ell = checked_power(eq.k, e);

  // W[t] carries the coordinates of f(z^{k^t}) over f(z), ..., f(z^{k^{d-1}}).
  std::vector<std::vector<RationalFunction>> w(e * d + 1,
                                               std::vector<RationalFunction>(d));
  for (std::size_t t = 0; t < d && t < w.size(); ++t) w[t][t] = RationalFunction(Rat(1));
  for (std::size_t t = d; t < w.size(); ++t) {
    std::size_t shift = checked_power(eq.k, static_cast<unsigned long>(t - d));
    RationalFunction lead(eq.coeffs[d].substitute_power(shift));
    for (std::size_t i = 0; i < d; ++i) {
      if (eq.coeffs[i].is_zero()) continue;
      RationalFunction c =
          RationalFunction(eq.coeffs[i].substitute_power(shift)) / lead;
      for (std::size_t j = 0; j < d; ++j) {
        if (w[t - d + i][j].is_zero()) continue;
        w[t][j] = w[t][j] - c * w[t - d + i][j];
      }
    }
  }

  std::vector<std::vector<RationalFunction>> cols;
  for (std::size_t i = 0; i <= d; ++i) cols.push_back(w[e * i]);
  for (std::size_t cap = 2; cap <= d + 1; ++cap) {
    std::vector<std::vector<RationalFunction>> window(cols.begin(),
                                                      cols.begin() + cap);
    std::vector<RationalFunction> dep = column_nullvector(window, d);
    if (dep.empty()) continue;
    MahlerEquation out;
    out.k = ell;
    out.coeffs = clear_denominators(dep);
    return normalize_equation(out);
  }
  fail(ErrorKind::InternalError,
       "rebase_relation: d+1 reduction vectors in a d-dimensional space must be dependent");
}

ReduceResult reduce_relation(
    const MahlerEquation& eq,
    const std::vector<std::pair<unsigned long, Polynomial>>& candidate) {
  require_normalized(eq, "reduce_relation");
  std::size_t d = eq.order();
  std::map<unsigned long, RationalFunction> acc;
  for (const auto& [i, p] : candidate) {
    if (!p.is_zero()) acc[i] = acc[i] + RationalFunction(p);
  }
  while (!acc.empty()) {
    auto it = std::prev(acc.end());
    if (it->second.is_zero()) {
      acc.erase(it);
      continue;
    }
    unsigned long t = it->first;
    if (t < d) break;
    RationalFunction c = it->second;
    acc.erase(it);
    // f(z^{k^t}) = -(1/p_d(z^{k^{t-d}})) sum_{i<d} p_i(z^{k^{t-d}}) f(z^{k^{t-d+i}})
    std::size_t shift = checked_power(eq.k, t - d);
    RationalFunction lead(eq.coeffs[d].substitute_power(shift));
    for (std::size_t i = 0; i < d; ++i) {
      if (eq.coeffs[i].is_zero()) continue;
      RationalFunction term =
          c * RationalFunction(eq.coeffs[i].substitute_power(shift)) / lead;
      acc[t - d + i] = acc[t - d + i] - term;
    }
  }
  ReduceResult res;
  res.residual.assign(d, RationalFunction());
  res.consequence = true;
  for (const auto& [i, v] : acc) {
    if (v.is_zero()) continue;
    res.residual[i] = v;
    res.consequence = false;
  }
  return res;
}

}  // namespace mahler
