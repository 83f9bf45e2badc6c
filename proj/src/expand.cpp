#include "mahler/expand.hpp"

#include <limits>
#include <string>
#include <utility>

#include "mahler/error.hpp"

namespace mahler {

namespace {

// Saturating power ladder: once past `ceiling` the exact value no longer
// matters (only divisibility by it, which then holds for 0 alone).
std::size_t next_power(std::size_t power, unsigned long k, std::size_t ceiling) {
  if (power > ceiling / k) return ceiling + 1;
  return power * k;
}

}  // namespace

CoefficientStream::CoefficientStream(SeriesSpec spec) : spec_(std::move(spec)) {
  spec_.equation = normalize_equation(spec_.equation);
  m_ = spec_.equation.coeffs.front().valuation();
  if (spec_.seeds.size() < m_ + 1) {
    fail(ErrorKind::UnderdeterminedSeeds,
         "the recurrence requires " + std::to_string(m_ + 1) +
             " seed coefficients (indices 0 through " + std::to_string(m_) +
             "), got " + std::to_string(spec_.seeds.size()));
  }
  alpha_ = spec_.equation.coeffs.front().coeffs();
  alpha_.erase(alpha_.begin(), alpha_.begin() + static_cast<long>(m_));
  buffer_ = spec_.seeds;
}

void CoefficientStream::ensure(std::size_t n) {
  const MahlerEquation& eq = spec_.equation;
  const std::size_t d = eq.order();
  const std::size_t ceiling = std::numeric_limits<std::size_t>::max() / 2;
  while (buffer_.size() <= n) {
    const std::size_t idx = buffer_.size();
    Rat value(0);
    for (std::size_t j = 1; j < alpha_.size() && j <= idx; ++j) {
      if (alpha_[j] == 0) continue;
      value -= alpha_[j] * buffer_[idx - j];
    }
    const std::size_t target = idx + m_;
    std::size_t power = 1;
    for (std::size_t i = 1; i <= d; ++i) {
      power = next_power(power, eq.k, ceiling);
      const Polynomial& p = eq.coeffs[i];
      for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const Rat& c = p.coeff(j);
        if (c == 0 || j > target) continue;
        const std::size_t rem = target - j;
        if (rem % power != 0) continue;
        value -= c * buffer_[rem / power];
      }
    }
    buffer_.push_back(std::move(value));
  }
}

const Rat& CoefficientStream::at(std::size_t n) {
  ensure(n);
  return buffer_[n];
}

std::vector<Rat> expand(const SeriesSpec& spec, std::size_t n) {
  CoefficientStream stream(spec);
  stream.ensure(n);
  std::vector<Rat> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(stream.at(i));
  return out;
}

std::optional<std::size_t> residual_order(const SeriesSpec& spec, std::size_t n) {
  CoefficientStream stream(spec);
  stream.ensure(n);
  const MahlerEquation& eq = stream.spec().equation;
  std::vector<Rat> res(n + 1, Rat(0));
  const std::size_t ceiling = std::numeric_limits<std::size_t>::max() / 2;
  std::size_t power = 1;
  for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
    const Polynomial& p = eq.coeffs[i];
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      const Rat& c = p.coeff(j);
      if (c == 0 || j > n) continue;
      for (std::size_t t = 0; t <= (n - j) / power; ++t) {
        res[power * t + j] += c * stream.at(t);
      }
    }
    power = next_power(power, eq.k, ceiling);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (res[i] != 0) return i;
  }
  return std::nullopt;
}

std::vector<double> height_sequence(const std::vector<Rat>& coeffs) {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(height_rational(c));
  return out;
}

}  // namespace mahler
