#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rinclose {

using Index = std::size_t;
using IndexList = std::vector<Index>;

/// Dense row-major matrix of finite reals. Rows are objects, columns are
/// attributes. Immutable once built.
class NumericMatrix {
 public:
  /// Throws std::invalid_argument on an empty shape, a size mismatch or a
  /// non-finite cell.
  NumericMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  NumericMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(Index row, Index col) const noexcept {
    return values_[row * cols_ + col];
  }
  /// Bounds-checked access; throws std::out_of_range.
  double at(Index row, Index col) const;

  std::span<const double> row(Index r) const noexcept {
    return {values_.data() + r * cols_, cols_};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  bool operator==(const NumericMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

NumericMatrix transpose(const NumericMatrix& matrix);

/// Largest max-min spread over any single column.
double max_column_range(const NumericMatrix& matrix);

}  // namespace rinclose
