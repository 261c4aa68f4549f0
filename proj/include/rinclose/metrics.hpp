#pragma once

#include <cstddef>
#include <vector>

#include "rinclose/bicluster.hpp"

namespace rinclose {

/// |I∩I'|·|J∩J'| / min(|I×J|, |I'×J'|). Both biclusters must be nonempty.
double overlap(const Bicluster& a, const Bicluster& b);

struct SolutionReport {
  std::size_t coverage_cells = 0;
  double coverage_fraction = 0.0;
  double global_overlap = 0.0;
  std::size_t num_biclusters = 0;
};

/// Cell set covered by the biclusters, as a row-major n·m bitmap.
/// Throws std::out_of_range for indices outside the grid.
std::vector<bool> span(const std::vector<Bicluster>& bics, std::size_t n, std::size_t m);

/// Global overlap is (Σ volume − coverage) / coverage, and 0 for an empty
/// solution.
SolutionReport solution_report(const std::vector<Bicluster>& bics, std::size_t n, std::size_t m);

/// Overlap of every pair (a < b) in list order.
std::vector<double> pairwise_overlaps(const std::vector<Bicluster>& bics);

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  /// Set when either side is empty; that side's ratio is reported as 0.
  bool empty_input = false;
};

/// precision = |span(found) ∩ span(reference)| / cov(found), recall swaps the roles.
PrecisionRecall precision_recall(const std::vector<Bicluster>& found,
                                 const std::vector<Bicluster>& reference, std::size_t n,
                                 std::size_t m);

}  // namespace rinclose
