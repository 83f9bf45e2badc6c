#include <cstddef>
#include <utility>
#include <vector>

#include "mahler/linrep.hpp"

namespace mahler {

namespace {

// Row basis kept in reduced echelon form; coordinates of an in-span vector
// can then be read off at the pivot columns.
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

  std::vector<Rat> coords(const std::vector<Rat>& x) const {
    std::vector<Rat> c(rows.size(), Rat(0));
    for (std::size_t j = 0; j < rows.size(); ++j) c[j] = x[pivots[j]];
    return c;
  }
};

std::vector<Rat> apply_row(const std::vector<Rat>& x, const RatMatrix& m) {
  std::vector<Rat> y(m.empty() ? 0 : m[0].size(), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * m[i][j];
  }
  return y;
}

// Restrict to the span of {u mu(w)}: the reachable row space. The new state
// coordinates are taken with respect to an echelon basis of that span.
LinearRepresentation reachability_reduce(const LinearRepresentation& rep) {
  EchelonBasis basis;
  std::vector<std::vector<Rat>> queue;
  if (rep.dim() > 0) queue.push_back(rep.u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<Rat> x = queue[head];
    if (!basis.insert(x)) continue;
    for (const auto& m : rep.mu) queue.push_back(apply_row(x, m));
  }
  const std::size_t dim = basis.rows.size();
  LinearRepresentation out;
  out.k = rep.k;
  out.u = basis.coords(rep.u);
  out.v.assign(dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t t = 0; t < rep.dim(); ++t) {
      out.v[i] += basis.rows[i][t] * rep.v[t];
    }
  }
  out.mu.assign(rep.mu.size(), RatMatrix(dim, std::vector<Rat>(dim, Rat(0))));
  for (std::size_t r = 0; r < rep.mu.size(); ++r) {
    for (std::size_t i = 0; i < dim; ++i) {
      out.mu[r][i] = basis.coords(apply_row(basis.rows[i], rep.mu[r]));
    }
  }
  return out;
}

LinearRepresentation transpose_rep(const LinearRepresentation& rep) {
  LinearRepresentation out;
  out.k = rep.k;
  out.u = rep.v;
  out.v = rep.u;
  const std::size_t d = rep.dim();
  out.mu.assign(rep.mu.size(), RatMatrix(d, std::vector<Rat>(d, Rat(0))));
  for (std::size_t r = 0; r < rep.mu.size(); ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out.mu[r][i][j] = rep.mu[r][j][i];
    }
  }
  return out;
}

}  // namespace

// Two-sided reduction: reachable span first, then the observable span on the
// transpose. The result has dimension equal to the rank of the value table
// indexed by word pairs, so it is minimal.
LinearRepresentation minimize_linrep(const LinearRepresentation& rep) {
  LinearRepresentation fwd = reachability_reduce(rep);
  return transpose_rep(reachability_reduce(transpose_rep(fwd)));
}

}  // namespace mahler
