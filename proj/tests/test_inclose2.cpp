#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "rinclose/inclose2.hpp"

using namespace rinclose;

namespace {

// Closes every attribute subset: B -> B' -> B''. Filters by size afterwards.
std::vector<Bicluster> concepts_by_closure(const NumericMatrix& a, std::size_t min_row,
                                           std::size_t min_col) {
  std::set<Bicluster> out;
  for (unsigned mask = 0; mask < (1U << a.cols()); ++mask) {
    IndexList extent;
    for (Index i = 0; i < a.rows(); ++i) {
      bool all = true;
      for (Index j = 0; j < a.cols(); ++j) {
        if ((mask >> j & 1U) && a(i, j) != 1.0) all = false;
      }
      if (all) extent.push_back(i);
    }
    IndexList intent;
    for (Index j = 0; j < a.cols(); ++j) {
      bool all = true;
      for (Index i : extent) all = all && a(i, j) == 1.0;
      if (all) intent.push_back(j);
    }
    if (extent.size() >= min_row && intent.size() >= min_col && !extent.empty() &&
        !intent.empty()) {
      out.insert({extent, intent});
    }
  }
  return {out.begin(), out.end()};
}

const NumericMatrix kSmall{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};

}  // namespace

TEST_SUITE("inclose2") {
  TEST_CASE("binary context rejects non-binary cells") {
    CHECK_THROWS_AS(BinaryContext(NumericMatrix{{1, 0.5}}), std::invalid_argument);
    CHECK_NOTHROW(BinaryContext(NumericMatrix{{1, 0}}));
  }

  TEST_CASE("derive_attr") {
    const BinaryContext identity(NumericMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(derive_attr(identity, 1) == IndexList{1});
    const BinaryContext ones(NumericMatrix{{1}, {1}, {1}});
    CHECK(derive_attr(ones, 0) == IndexList{0, 1, 2});

    IndexList scanned;
    for (Index i = 0; i < kSmall.rows(); ++i) {
      if (kSmall(i, 0) == 1.0) scanned.push_back(i);
    }
    CHECK(derive_attr(BinaryContext(kSmall), 0) == scanned);
    CHECK_THROWS_AS(derive_attr(identity, 3), std::out_of_range);
  }

  TEST_CASE("small context, all concepts") {
    const auto expected = concepts_by_closure(kSmall, 1, 1);
    const std::vector<Bicluster> listed{
        {{0, 1}, {0, 1}}, {{1}, {0, 1, 2}}, {{0, 1, 2}, {1}}, {{1, 2}, {1, 2}}};
    CHECK(expected == testing::sorted(listed));
    const auto got = enumerate_ctv_binary(BinaryContext(kSmall), 1, 1);
    CHECK(testing::sorted(got.biclusters) == expected);
    CHECK(got.biclusters.size() == expected.size());
  }

  TEST_CASE("small context with size floors") {
    const auto expected = concepts_by_closure(kSmall, 2, 2);
    CHECK(expected == std::vector<Bicluster>{{{0, 1}, {0, 1}}, {{1, 2}, {1, 2}}});
    const auto got = enumerate_ctv_binary(BinaryContext(kSmall), 2, 2);
    CHECK(testing::sorted(got.biclusters) == expected);
  }

  TEST_CASE("all-ones context has one concept") {
    const auto got = enumerate_ctv_binary(BinaryContext(NumericMatrix{{1, 1}, {1, 1}}), 1, 1);
    CHECK(got.biclusters == std::vector<Bicluster>{{{0, 1}, {0, 1}}});
  }

  TEST_CASE("top concept with an empty intent is not emitted") {
    const auto got = enumerate_ctv_binary(BinaryContext(NumericMatrix{{1, 0}, {0, 1}}), 1, 1);
    CHECK(testing::sorted(got.biclusters) == std::vector<Bicluster>{{{0}, {0}}, {{1}, {1}}});
  }

  TEST_CASE("concepts are closed both ways and match closure search") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      const std::size_t m = 1 + rng() % 12;
      const auto a = testing::binary_matrix(rng, n, m, 0.5);
      const std::size_t min_row = 1 + rng() % 3;
      const std::size_t min_col = 1 + rng() % 3;
      const auto got = enumerate_ctv_binary(BinaryContext(a), min_row, min_col);
      CHECK(testing::sorted(got.biclusters) == concepts_by_closure(a, min_row, min_col));
      CHECK(got.biclusters.size() == testing::sorted(got.biclusters).size());
      const std::size_t k = std::max<std::size_t>(got.biclusters.size(), 1);
      CHECK(got.stats.nodes <= 2 * k * m * m);
    }
  }
}
