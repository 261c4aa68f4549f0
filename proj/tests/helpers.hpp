#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace testing {

using rinclose::Bicluster;
using rinclose::NumericMatrix;

/// Cells drawn from {0, step, 2*step, ..., levels*step}. With a power-of-two
/// step every difference is exact, so epsilon comparisons have no rounding.
inline NumericMatrix grid_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int levels,
                                 double step = 1.0) {
  std::uniform_int_distribution<int> pick(0, levels);
  std::vector<double> v(n * m);
  for (double& x : v) x = pick(rng) * step;
  return NumericMatrix(n, m, std::move(v));
}

inline NumericMatrix binary_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                   double density) {
  std::bernoulli_distribution one(density);
  std::vector<double> v(n * m);
  for (double& x : v) x = one(rng) ? 1.0 : 0.0;
  return NumericMatrix(n, m, std::move(v));
}

inline std::vector<Bicluster> sorted(std::vector<Bicluster> bics) {
  return rinclose::sorted_set(std::move(bics));
}

/// Every pair (I, J) of the list that is a subset-pair of another entry.
inline bool has_dominated_pair(const std::vector<Bicluster>& bics) {
  auto subset = [](const rinclose::IndexList& a, const rinclose::IndexList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t x = 0; x < bics.size(); ++x) {
    for (std::size_t y = 0; y < bics.size(); ++y) {
      if (x != y && subset(bics[x].rows, bics[y].rows) && subset(bics[x].cols, bics[y].cols)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace testing
