#include "mahler/linrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "mahler/error.hpp"

namespace mahler {

namespace {

// Section operator on polynomials: picks the exponents congruent to r mod k
// and reads them as a polynomial in z^k.
Polynomial section(const Polynomial& p, unsigned long r, unsigned long k) {
  std::vector<Rat> out;
  for (std::size_t j = r; j < p.coeffs().size(); j += k) {
    out.push_back(p.coeff(j));
  }
  return Polynomial(std::move(out));
}

std::vector<unsigned long> digits_msd_first(unsigned long long n, unsigned long k) {
  std::vector<unsigned long> d;
  while (n > 0) {
    d.push_back(static_cast<unsigned long>(n % k));
    n /= k;
  }
  std::reverse(d.begin(), d.end());
  return d;
}

std::vector<Rat> apply_row(const std::vector<Rat>& x, const RatMatrix& m) {
  std::vector<Rat> y(m.empty() ? 0 : m[0].size(), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] += x[i] * m[i][j];
    }
  }
  return y;
}

void check_same_radix(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.k != b.k) {
    fail(ErrorKind::RadixMismatch,
         "representations have radices " + std::to_string(a.k) + " and " +
             std::to_string(b.k));
  }
}

}  // namespace

Rat eval_linrep(const LinearRepresentation& rep, unsigned long long n) {
  std::vector<Rat> x = rep.u;
  for (unsigned long d : digits_msd_first(n, rep.k)) {
    x = apply_row(x, rep.mu[d]);
  }
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * rep.v[i];
  return s;
}

LinearRepresentation becker_to_linrep(const MahlerEquation& eq, const Rat& a0) {
  if (eq.coeffs.empty() || !(eq.coeffs[0] == Polynomial::one()) || eq.order() < 1) {
    fail(ErrorKind::MalformedBecker,
         "equation is not in the form f(z) = sum of p_j(z) f(z^(k^j))");
  }
  const unsigned long k = eq.k;
  const std::size_t d = eq.order();
  long e = 0;
  for (const auto& c : eq.coeffs) e = std::max(e, c.degree());
  const std::size_t width = static_cast<std::size_t>(e) + 1;
  // Basis slot (i, j) carries z^i f(z^{k^j}); the sequence vector is indexed
  // slot(i, j) = j*width + i.
  auto slot = [width](std::size_t i, std::size_t j) { return j * width + i; };
  const std::size_t dim = width * (d + 1);

  LinearRepresentation rep;
  rep.k = k;
  rep.u.assign(dim, Rat(0));
  for (std::size_t j = 0; j <= d; ++j) rep.u[slot(0, j)] = a0;
  rep.v.assign(dim, Rat(0));
  rep.v[slot(0, 0)] = 1;

  rep.mu.assign(k, RatMatrix(dim, std::vector<Rat>(dim, Rat(0))));
  for (unsigned long r = 0; r < k; ++r) {
    RatMatrix& m = rep.mu[r];
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 1; j <= d; ++j) {
        // Section of z^i f(z^{k^j}): nonzero only when i = r mod k.
        if (i % k == r) {
          m[slot((i - r) / k, j - 1)][slot(i, j)] = 1;
        }
      }
      // Section of z^i f(z) via the equation itself.
      for (std::size_t t = 1; t <= d; ++t) {
        Polynomial piece = section((-eq.coeffs[t]).times_power(i), r, k);
        for (std::size_t s = 0; s < piece.coeffs().size(); ++s) {
          if (piece.coeff(s) == 0) continue;
          m[slot(s, t - 1)][slot(i, 0)] += piece.coeff(s);
        }
      }
    }
  }
  return rep;
}

LinearRepresentation linrep_of_polynomial(const Polynomial& p, unsigned long k) {
  if (k < 2) fail(ErrorKind::RadixMismatch, "radix must be at least 2");
  LinearRepresentation rep;
  rep.k = k;
  if (p.is_zero()) {
    rep.mu.assign(k, RatMatrix{});
    return rep;
  }
  // Close {p} under the section operators; degrees divide by k each step, so
  // the closure is finite.
  std::vector<Polynomial> basis{p};
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (unsigned long r = 0; r < k; ++r) {
      Polynomial q = section(basis[head], r, k);
      if (q.is_zero()) continue;
      if (std::find(basis.begin(), basis.end(), q) == basis.end()) {
        basis.push_back(std::move(q));
      }
    }
  }
  const std::size_t dim = basis.size();
  rep.u.assign(dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) rep.u[i] = basis[i].constant();
  rep.v.assign(dim, Rat(0));
  rep.v[0] = 1;
  rep.mu.assign(k, RatMatrix(dim, std::vector<Rat>(dim, Rat(0))));
  for (unsigned long r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < dim; ++i) {
      Polynomial q = section(basis[i], r, k);
      if (q.is_zero()) continue;
      auto it = std::find(basis.begin(), basis.end(), q);
      rep.mu[r][static_cast<std::size_t>(it - basis.begin())][i] = 1;
    }
  }
  return rep;
}

LinearRepresentation sum_linrep(const LinearRepresentation& a,
                                const LinearRepresentation& b) {
  check_same_radix(a, b);
  LinearRepresentation rep;
  rep.k = a.k;
  const std::size_t da = a.dim(), db = b.dim();
  rep.u = a.u;
  rep.u.insert(rep.u.end(), b.u.begin(), b.u.end());
  rep.v = a.v;
  rep.v.insert(rep.v.end(), b.v.begin(), b.v.end());
  rep.mu.assign(a.k, RatMatrix(da + db, std::vector<Rat>(da + db, Rat(0))));
  for (unsigned long r = 0; r < a.k; ++r) {
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) rep.mu[r][i][j] = a.mu[r][i][j];
    }
    for (std::size_t i = 0; i < db; ++i) {
      for (std::size_t j = 0; j < db; ++j) rep.mu[r][da + i][da + j] = b.mu[r][i][j];
    }
  }
  return rep;
}

LinearRepresentation scale_linrep(const Rat& c, const LinearRepresentation& a) {
  LinearRepresentation rep = a;
  for (auto& x : rep.u) x *= c;
  return rep;
}

Automaton to_automaton(const LinearRepresentation& rep, std::size_t state_cap) {
  Automaton a;
  a.k = rep.k;
  std::map<std::vector<Rat>, std::size_t> index;
  a.states.push_back(rep.u);
  index[rep.u] = 0;
  for (std::size_t head = 0; head < a.states.size(); ++head) {
    a.transitions.emplace_back();
    for (unsigned long r = 0; r < rep.k; ++r) {
      auto next = apply_row(a.states[head], rep.mu[r]);
      auto it = index.find(next);
      std::size_t id;
      if (it != index.end()) {
        id = it->second;
      } else {
        if (a.states.size() >= state_cap) {
          fail(ErrorKind::OrbitNotFinite,
               "state orbit exceeds " + std::to_string(state_cap) + " vectors");
        }
        id = a.states.size();
        index[next] = id;
        a.states.push_back(std::move(next));
      }
      a.transitions[head].push_back(id);
    }
  }
  a.outputs.reserve(a.states.size());
  for (const auto& x : a.states) {
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * rep.v[i];
    a.outputs.push_back(s);
  }
  return a;
}

std::string to_dot(const Automaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    out << "  s" << s << " [label=\"" << rat_to_string(a.outputs[s]) << "\"];\n";
  }
  for (std::size_t s = 0; s < a.transitions.size(); ++s) {
    for (std::size_t r = 0; r < a.transitions[s].size(); ++r) {
      out << "  s" << s << " -> s" << a.transitions[s][r] << " [label=\"" << r
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mahler
