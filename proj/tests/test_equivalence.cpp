#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rinclose/cvc.hpp"
#include "rinclose/enumerate.hpp"
#include "rinclose/oracle.hpp"
#include "rinclose/validity.hpp"

using namespace rinclose;
using testing::sorted;

namespace {

void check_against_oracle(const NumericMatrix& a, const EnumParams& p) {
  const auto got = enumerate(a, p);
  const auto want = oracle_enumerate(a, p);
  INFO("type=" << to_string(p.type) << " eps=" << p.epsilon << " min_row=" << p.min_row
               << " min_col=" << p.min_col << " n=" << a.rows() << " m=" << a.cols());
  CHECK(got.biclusters.size() == sorted(got.biclusters).size());
  CHECK(sorted(got.biclusters) == want.biclusters);
}

EnumParams params_for(BicType type, double eps, std::size_t min_row, std::size_t min_col) {
  EnumParams p;
  p.type = type;
  p.epsilon = is_perfect(type) || type == BicType::CtvBinary ? 0.0 : eps;
  p.min_row = min_row;
  p.min_col = min_col;
  return p;
}

}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("cvc enumerators match the oracle on random grids") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + rng() % 11;
      const std::size_t m = 1 + rng() % 8;
      const int levels = 2 + static_cast<int>(rng() % 6);
      const auto a = testing::grid_matrix(rng, n, m, levels, 0.5);
      const std::size_t min_row = 1 + rng() % 3;
      const std::size_t min_col = 1 + rng() % 3;
      const double eps = 0.5 * static_cast<double>(1 + rng() % 3);
      for (BicType t : {BicType::CvcPerfect, BicType::Cvc, BicType::CvrPerfect, BicType::Cvr}) {
        check_against_oracle(a, params_for(t, eps, min_row, min_col));
      }
    }
  }

  TEST_CASE("chv enumerators match the oracle on random grids") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + rng() % 9;
      const std::size_t m = 2 + rng() % 5;
      const int levels = 2 + static_cast<int>(rng() % 5);
      const auto a = testing::grid_matrix(rng, n, m, levels, 0.5);
      const std::size_t min_row = 1 + rng() % 3;
      const std::size_t min_col = 2 + rng() % 2;
      const double eps = 0.5 * static_cast<double>(1 + rng() % 3);
      for (BicType t : {BicType::ChvPerfect, BicType::Chv}) {
        check_against_oracle(a, params_for(t, eps, min_row, min_col));
      }
    }
  }

  TEST_CASE("in-close2 matches the oracle on random binary matrices") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const double density = 0.3 + 0.1 * static_cast<double>(rng() % 5);
      const auto a = testing::binary_matrix(rng, 12, 12, density);
      check_against_oracle(a, params_for(BicType::CtvBinary, 0, 1 + rng() % 3, 1 + rng() % 3));
    }
  }
}
