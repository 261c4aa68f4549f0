#include "rinclose/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rinclose {

NumericMatrix::NumericMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("matrix must have at least one row and one column");
  }
  if (values_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix value count " + std::to_string(values_.size()) +
                                " does not match shape " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw std::invalid_argument("non-finite value at cell (" + std::to_string(k / cols_) +
                                  "," + std::to_string(k % cols_) + ")");
    }
  }
}

namespace {

std::size_t literal_cols(std::initializer_list<std::initializer_list<double>> rows) {
  return rows.size() == 0 ? 0 : rows.begin()->size();
}

std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n_cols = literal_cols(rows);
  std::vector<double> out;
  out.reserve(rows.size() * n_cols);
  for (const auto& r : rows) {
    if (r.size() != n_cols) throw std::invalid_argument("ragged matrix literal");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

NumericMatrix::NumericMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : NumericMatrix(rows.size(), literal_cols(rows), flatten(rows)) {}

double NumericMatrix::at(Index row, Index col) const {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
  }
  return (*this)(row, col);
}

NumericMatrix transpose(const NumericMatrix& matrix) {
  std::vector<double> out(matrix.rows() * matrix.cols());
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) out[j * matrix.rows() + i] = matrix(i, j);
  }
  return NumericMatrix(matrix.cols(), matrix.rows(), std::move(out));
}

double max_column_range(const NumericMatrix& matrix) {
  double widest = 0.0;
  for (Index j = 0; j < matrix.cols(); ++j) {
    double lo = matrix(0, j);
    double hi = lo;
    for (Index i = 1; i < matrix.rows(); ++i) {
      lo = std::min(lo, matrix(i, j));
      hi = std::max(hi, matrix(i, j));
    }
    widest = std::max(widest, hi - lo);
  }
  return widest;
}

}  // namespace rinclose
