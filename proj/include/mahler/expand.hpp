#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mahler/rational.hpp"
#include "mahler/series_spec.hpp"

namespace mahler {

// Streams the exact coefficients of a SeriesSpec through the recurrence read
// off the equation: with p_0 = z^m (1 + alpha_1 z + ...), for n > m
//   a_n = -sum_j alpha_j a_{n-j} - sum_{i>=1} sum_j [z^j]p_i * a_{(n+m-j)/k^i},
// where indices that are negative or fractional contribute nothing.
class CoefficientStream {
 public:
  explicit CoefficientStream(SeriesSpec spec);

  const SeriesSpec& spec() const { return spec_; }
  // Valuation of p_0; seeds must cover indices 0..m.
  std::size_t m() const { return m_; }

  // Grows the buffer to hold index n.
  void ensure(std::size_t n);
  const Rat& at(std::size_t n);
  std::size_t size() const { return buffer_.size(); }

 private:
  SeriesSpec spec_;
  std::size_t m_ = 0;
  std::vector<Rat> alpha_;  // 1 + alpha_1 z + ... = p_0 / z^m
  std::vector<Rat> buffer_;
};

// First N+1 coefficients a_0..a_N.
std::vector<Rat> expand(const SeriesSpec& spec, std::size_t n);

// First index <= N where sum_i p_i(z) f(z^{k^i}) has a nonzero coefficient;
// nullopt when the residual vanishes through order N.
std::optional<std::size_t> residual_order(const SeriesSpec& spec, std::size_t n);

// Pointwise logarithmic height.
std::vector<double> height_sequence(const std::vector<Rat>& coeffs);

}  // namespace mahler
