#pragma once

#include <cstddef>

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

/// A formal context: objects are rows, attributes are columns, and the
/// incidence relation is the set of cells equal to 1.
class BinaryContext {
 public:
  /// Throws std::invalid_argument if any cell is neither 0 nor 1.
  explicit BinaryContext(NumericMatrix matrix);

  const NumericMatrix& matrix() const noexcept { return matrix_; }
  std::size_t objects() const noexcept { return matrix_.rows(); }
  std::size_t attributes() const noexcept { return matrix_.cols(); }
  bool incident(Index row, Index col) const noexcept { return matrix_(row, col) == 1.0; }

 private:
  NumericMatrix matrix_;
};

/// Rows having a 1 in `col`. Throws std::out_of_range for a bad column.
IndexList derive_attr(const BinaryContext& context, Index col);

/// In-Close2: all formal concepts (A, B) with |A| >= min_row and
/// |B| >= min_col, each exactly once. stats.nodes counts closed nodes.
BiclusterSolution enumerate_ctv_binary(const BinaryContext& context, std::size_t min_row,
                                       std::size_t min_col);

}  // namespace rinclose
