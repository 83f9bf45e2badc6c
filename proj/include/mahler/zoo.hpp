#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mahler/rational.hpp"
#include "mahler/series_spec.hpp"

namespace mahler {

// A catalog series with its equation-backed spec, the height-growth class it
// belongs to, and an independent construction of its coefficients used to
// cross-check the recurrence.
struct ZooEntry {
  std::string name;
  SeriesSpec spec;
  int expected_class = 0;  // 1..5
  std::vector<Rat> oracle;  // values a_0..a_N from the direct construction
};

// Catalog lookup; `n` bounds the oracle (values 0..n). UnknownName for
// anything not in zoo_names().
ZooEntry zoo(const std::string& name, std::size_t n);

const std::vector<std::string>& zoo_names();

}  // namespace mahler
