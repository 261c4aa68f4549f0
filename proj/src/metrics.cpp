#include "rinclose/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rinclose {

namespace {

std::size_t common(const IndexList& a, const IndexList& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::size_t count_set(const std::vector<bool>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

}  // namespace

double overlap(const Bicluster& a, const Bicluster& b) {
  if (a.volume() == 0 || b.volume() == 0) {
    throw std::invalid_argument("overlap needs nonempty biclusters");
  }
  const double shared = static_cast<double>(common(a.rows, b.rows) * common(a.cols, b.cols));
  return shared / static_cast<double>(std::min(a.volume(), b.volume()));
}

std::vector<bool> span(const std::vector<Bicluster>& bics, std::size_t n, std::size_t m) {
  std::vector<bool> cells(n * m, false);
  for (const auto& b : bics) {
    for (Index i : b.rows) {
      if (i >= n) throw std::out_of_range("row " + std::to_string(i) + " outside grid");
      for (Index j : b.cols) {
        if (j >= m) throw std::out_of_range("column " + std::to_string(j) + " outside grid");
        cells[i * m + j] = true;
      }
    }
  }
  return cells;
}

SolutionReport solution_report(const std::vector<Bicluster>& bics, std::size_t n, std::size_t m) {
  SolutionReport report;
  report.num_biclusters = bics.size();
  report.coverage_cells = count_set(span(bics, n, m));
  report.coverage_fraction =
      n * m == 0 ? 0.0 : static_cast<double>(report.coverage_cells) / static_cast<double>(n * m);
  if (report.coverage_cells > 0) {
    std::size_t total = 0;
    for (const auto& b : bics) total += b.volume();
    report.global_overlap = static_cast<double>(total - report.coverage_cells) /
                            static_cast<double>(report.coverage_cells);
  }
  return report;
}

std::vector<double> pairwise_overlaps(const std::vector<Bicluster>& bics) {
  std::vector<double> out;
  for (std::size_t a = 0; a < bics.size(); ++a) {
    for (std::size_t b = a + 1; b < bics.size(); ++b) out.push_back(overlap(bics[a], bics[b]));
  }
  return out;
}

PrecisionRecall precision_recall(const std::vector<Bicluster>& found,
                                 const std::vector<Bicluster>& reference, std::size_t n,
                                 std::size_t m) {
  const auto f = span(found, n, m);
  const auto r = span(reference, n, m);
  std::size_t both = 0;
  for (std::size_t c = 0; c < f.size(); ++c) both += (f[c] && r[c]) ? 1 : 0;
  const std::size_t cov_f = count_set(f);
  const std::size_t cov_r = count_set(r);
  PrecisionRecall pr;
  pr.empty_input = cov_f == 0 || cov_r == 0;
  pr.precision = cov_f == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(cov_f);
  pr.recall = cov_r == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(cov_r);
  return pr;
}

}  // namespace rinclose
