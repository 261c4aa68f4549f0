#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

enum class Pattern { Cvc, ChvShift };

std::string_view to_string(Pattern pattern);
/// Accepts "cvc" and "chv-shift"; throws std::invalid_argument otherwise.
Pattern parse_pattern(std::string_view name);

/// Planted-bicluster benchmark settings.
///
/// Value model: background cells are uniform on [0, 100]. Each column has a
/// base value and each row a shift, both uniform on [0, 10] and rounded to a
/// multiple of 1/1024 so sums are exact. A planted cell is the column base
/// (cvc) or base + row shift (chv-shift), so cells shared by overlapping
/// biclusters agree. Gaussian noise N(0, sigma) is then added to every cell.
///
/// Overlap: bicluster l shares its last floor(overlap * bic_rows) rows and
/// floor(overlap * bic_cols) columns with bicluster l + 1. Row blocks are laid
/// out in sequence and must fit; column blocks wrap around the last column
/// when the chain is longer than m, so biclusters that are not neighbours may
/// share columns but never rows.
struct GenConfig {
  std::size_t n = 500;
  std::size_t m = 30;
  std::size_t num_bics = 5;
  std::size_t bic_rows = 50;
  std::size_t bic_cols = 6;
  double overlap = 0.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;
  Pattern pattern = Pattern::ChvShift;

  /// Throws std::invalid_argument if the planted layout does not fit.
  void validate() const;
};

struct GeneratedData {
  NumericMatrix matrix;
  /// Planted biclusters in the final (shuffled) indices.
  BiclusterSolution truth;
  /// Measured residue of each planted bicluster, in truth order.
  std::vector<double> residues;
};

/// Deterministic for a fixed config (seeded std::mt19937_64).
GeneratedData generate(const GenConfig& config);

}  // namespace rinclose
