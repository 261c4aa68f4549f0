#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "doctest.h"
#include "rinclose/datagen.hpp"
#include "rinclose/enumerate.hpp"
#include "rinclose/metrics.hpp"
#include "rinclose/validity.hpp"

using namespace rinclose;

namespace {

GenConfig small(Pattern pattern, double overlap, double sigma, std::uint64_t seed = 1) {
  GenConfig c;
  c.n = 120;
  c.m = 16;
  c.num_bics = 3;
  c.bic_rows = 20;
  c.bic_cols = 5;
  c.overlap = overlap;
  c.noise_sigma = sigma;
  c.seed = seed;
  c.pattern = pattern;
  return c;
}

std::size_t shared(const IndexList& a, const IndexList& b) {
  IndexList both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

}  // namespace

TEST_SUITE("datagen") {
  TEST_CASE("noise-free planted biclusters are perfect") {
    for (Pattern pat : {Pattern::ChvShift, Pattern::Cvc}) {
      const auto data = generate(small(pat, 0.2, 0.0));
      EnumParams p;
      p.type = pat == Pattern::Cvc ? BicType::CvcPerfect : BicType::ChvPerfect;
      REQUIRE(data.truth.biclusters.size() == 3);
      for (const auto& b : data.truth.biclusters) {
        CHECK(b.rows.size() == 20);
        CHECK(b.cols.size() == 5);
        CHECK(is_valid(data.matrix, b, p));
      }
      for (double r : data.residues) CHECK(r == 0.0);
    }
  }

  TEST_CASE("overlap shares rows and columns between consecutive biclusters") {
    const auto none = generate(small(Pattern::ChvShift, 0.0, 0.0)).truth.biclusters;
    for (std::size_t x = 0; x < none.size(); ++x) {
      for (std::size_t y = x + 1; y < none.size(); ++y) {
        CHECK(shared(none[x].rows, none[y].rows) == 0);
        CHECK(shared(none[x].cols, none[y].cols) == 0);
      }
    }
    const auto some = generate(small(Pattern::ChvShift, 0.25, 0.0)).truth.biclusters;
    for (std::size_t x = 0; x + 1 < some.size(); ++x) {
      CHECK(shared(some[x].rows, some[x + 1].rows) == 5);
      CHECK(shared(some[x].cols, some[x + 1].cols) == 1);
    }
  }

  TEST_CASE("long column chains wrap without sharing rows") {
    GenConfig c;
    c.n = 1700;
    c.m = 60;
    c.num_bics = 10;
    c.bic_rows = 200;
    c.bic_cols = 8;
    c.overlap = 0.2;
    const auto bics = generate(c).truth.biclusters;
    REQUIRE(bics.size() == 10);
    for (std::size_t x = 0; x < bics.size(); ++x) {
      CHECK(bics[x].cols.size() == 8);
      for (std::size_t y = x + 1; y < bics.size(); ++y) {
        if (y == x + 1) {
          CHECK(shared(bics[x].rows, bics[y].rows) == 40);
          CHECK(shared(bics[x].cols, bics[y].cols) == 1);
        } else {
          CHECK(shared(bics[x].rows, bics[y].rows) == 0);
        }
      }
    }
  }

  TEST_CASE("planted biclusters are scattered by the shuffle") {
    const auto b = generate(small(Pattern::ChvShift, 0.0, 0.0)).truth.biclusters.front();
    CHECK(b.rows.back() - b.rows.front() + 1 > b.rows.size());
  }

  TEST_CASE("seeded output is deterministic") {
    const auto a = generate(small(Pattern::ChvShift, 0.2, 0.01, 5));
    const auto b = generate(small(Pattern::ChvShift, 0.2, 0.01, 5));
    const auto c = generate(small(Pattern::ChvShift, 0.2, 0.01, 6));
    CHECK(a.matrix == b.matrix);
    CHECK(a.truth.biclusters == b.truth.biclusters);
    CHECK_FALSE(a.matrix == c.matrix);
  }

  TEST_CASE("recorded residues match the measured residue") {
    const auto data = generate(small(Pattern::ChvShift, 0.2, 0.01));
    EnumParams p;
    p.type = BicType::Chv;
    for (std::size_t l = 0; l < data.residues.size(); ++l) {
      CHECK(data.residues[l] == residue(data.matrix, data.truth.biclusters[l], p));
      CHECK(data.residues[l] > 0.0);
      CHECK(data.residues[l] < 0.2);
    }
    CHECK(data.truth.params.epsilon ==
          *std::max_element(data.residues.begin(), data.residues.end()));
  }

  TEST_CASE("infeasible layouts are rejected") {
    auto c = small(Pattern::Cvc, 0.0, 0.0);
    c.num_bics = 7;  // 7 * 20 rows > 120
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    c = small(Pattern::Cvc, 0.0, 0.0);
    c.m = 9;  // two neighbours need 10 columns
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    c = small(Pattern::Cvc, 1.0, 0.0);
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    c = small(Pattern::Cvc, 0.0, -1.0);
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("chv-scale"), std::invalid_argument);
  }

  TEST_CASE("noise-free data is recovered exactly at epsilon 0") {
    for (Pattern pat : {Pattern::ChvShift, Pattern::Cvc}) {
      const auto data = generate(small(pat, 0.2, 0.0, 3));
      EnumParams p;
      p.type = pat == Pattern::Cvc ? BicType::CvcPerfect : BicType::ChvPerfect;
      p.min_row = 20;
      p.min_col = 5;
      const auto found = enumerate(data.matrix, p);
      const auto pr = precision_recall(found.biclusters, data.truth.biclusters, 120, 16);
      CHECK(pr.precision == 1.0);
      CHECK(pr.recall == 1.0);
    }
  }
}
