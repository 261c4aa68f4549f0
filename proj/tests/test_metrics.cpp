#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rinclose/metrics.hpp"

using namespace rinclose;

namespace {

std::vector<Bicluster> random_solution(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Bicluster> out(rng() % 4);
  for (auto& b : out) {
    b = make_bicluster({rng() % n, rng() % n, rng() % n}, {rng() % m, rng() % m});
  }
  return out;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("overlap") {
    const Bicluster a{{0, 1}, {0, 1}};
    CHECK(overlap(a, a) == 1.0);
    CHECK(overlap(a, {{2, 3}, {0, 1}}) == 0.0);
    // One shared row and one shared column over min(4, 4) cells.
    const double want = (1.0 * 1.0) / 4.0;
    CHECK(overlap(a, {{1, 2}, {1, 2}}) == want);
    CHECK_THROWS_AS(overlap(a, Bicluster{}), std::invalid_argument);
  }

  TEST_CASE("solution report") {
    const auto one = solution_report({{{0, 1}, {0, 1, 2}}}, 4, 5);
    CHECK(one.coverage_cells == 6);
    CHECK(one.coverage_fraction == 0.3);
    CHECK(one.global_overlap == 0.0);

    const std::vector<Bicluster> two{{{0, 1}, {0, 1}}, {{1, 2}, {1, 2}}};
    const std::size_t cells = 4 + 4 - 1;
    const auto r = solution_report(two, 4, 5);
    CHECK(r.coverage_cells == cells);
    CHECK(r.global_overlap == doctest::Approx((8.0 - cells) / cells).epsilon(1e-15));
    CHECK(r.num_biclusters == 2);

    const Bicluster b{{0, 3}, {2, 4}};
    CHECK(solution_report({b, b}, 4, 5).global_overlap == 1.0);

    const auto empty = solution_report({}, 4, 5);
    CHECK(empty.coverage_cells == 0);
    CHECK(empty.global_overlap == 0.0);
    CHECK_THROWS_AS(solution_report({{{4}, {0}}}, 4, 5), std::out_of_range);
  }

  TEST_CASE("precision and recall") {
    const std::vector<Bicluster> ref{{{0, 1}, {0, 1, 2, 3}}};
    const auto same = precision_recall(ref, ref, 4, 4);
    CHECK(same.precision == 1.0);
    CHECK(same.recall == 1.0);
    CHECK_FALSE(same.empty_input);

    const auto half = precision_recall({{{0, 1}, {0, 1}}}, ref, 4, 4);
    CHECK(half.precision == 1.0);
    CHECK(half.recall == 0.5);

    const auto none = precision_recall({}, ref, 4, 4);
    CHECK(none.precision == 0.0);
    CHECK(none.empty_input);
  }

  TEST_CASE("precision of A against B is recall of B against A") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_solution(rng, 6, 5);
      const auto b = random_solution(rng, 6, 5);
      const auto ab = precision_recall(a, b, 6, 5);
      const auto ba = precision_recall(b, a, 6, 5);
      CHECK(ab.precision == ba.recall);
      CHECK(ab.recall == ba.precision);
    }
  }

  TEST_CASE("adding a bicluster never shrinks coverage") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 200; ++trial) {
      auto sol = random_solution(rng, 6, 5);
      const auto before = solution_report(sol, 6, 5);
      sol.push_back(make_bicluster({rng() % 6}, {rng() % 5, rng() % 5}));
      const auto after = solution_report(sol, 6, 5);
      CHECK(after.coverage_cells >= before.coverage_cells);
      CHECK(after.global_overlap >= 0.0);
    }
  }

  TEST_CASE("pairwise overlaps in list order") {
    const std::vector<Bicluster> bics{{{0}, {0}}, {{0, 1}, {0}}, {{2}, {1}}};
    CHECK(pairwise_overlaps(bics) == std::vector<double>{1.0, 0.0, 0.0});
  }
}
