#include "rinclose/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rinclose {

namespace {

void check_indices(const NumericMatrix& matrix, const Bicluster& bic) {
  for (Index i : bic.rows) {
    if (i >= matrix.rows()) {
      throw std::out_of_range("row " + std::to_string(i) + " outside matrix with " +
                              std::to_string(matrix.rows()) + " rows");
    }
  }
  for (Index j : bic.cols) {
    if (j >= matrix.cols()) {
      throw std::out_of_range("column " + std::to_string(j) + " outside matrix with " +
                              std::to_string(matrix.cols()) + " columns");
    }
  }
}

struct CellReader {
  const NumericMatrix& matrix;
  bool log_space;
  double operator()(Index i, Index j) const {
    return log_space ? std::log(matrix(i, j)) : matrix(i, j);
  }
};

template <typename Values>
bool spread_within(const Values& values, double epsilon) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo <= epsilon;
}

bool valid_unchecked(const NumericMatrix& matrix, const IndexList& rows, const IndexList& cols,
                     const EnumParams& params) {
  const double eps = params.epsilon;
  std::vector<double> buf;
  switch (params.type) {
    case BicType::CtvBinary:
      for (Index i : rows) {
        for (Index j : cols) {
          if (matrix(i, j) != 1.0) return false;
        }
      }
      return true;
    case BicType::CvcPerfect:
    case BicType::Cvc:
      for (Index j : cols) {
        buf.clear();
        for (Index i : rows) buf.push_back(matrix(i, j));
        if (!spread_within(buf, eps)) return false;
      }
      return true;
    case BicType::CvrPerfect:
    case BicType::Cvr:
      for (Index i : rows) {
        buf.clear();
        for (Index j : cols) buf.push_back(matrix(i, j));
        if (!spread_within(buf, eps)) return false;
      }
      return true;
    case BicType::ChvPerfect:
    case BicType::Chv: {
      const CellReader cell{matrix, params.model == Model::Scale};
      for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
          buf.clear();
          for (Index i : rows) buf.push_back(cell(i, cols[a]) - cell(i, cols[b]));
          if (!spread_within(buf, eps)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

IndexList with_extra(const IndexList& ids, Index extra) {
  IndexList out = ids;
  out.insert(std::upper_bound(out.begin(), out.end(), extra), extra);
  return out;
}

}  // namespace

bool is_valid(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params) {
  check_indices(matrix, bic);
  return valid_unchecked(matrix, bic.rows, bic.cols, params);
}

double residue(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params) {
  check_indices(matrix, bic);
  if (bic.rows.empty() || bic.cols.empty()) return 0.0;
  double worst = 0.0;
  auto widen = [&worst](double lo, double hi) { worst = std::max(worst, hi - lo); };
  const CellReader cell{matrix, is_chv(params.type) && params.model == Model::Scale};
  switch (params.type) {
    case BicType::CtvBinary:
      for (Index i : bic.rows) {
        for (Index j : bic.cols) {
          if (matrix(i, j) != 1.0) return std::numeric_limits<double>::infinity();
        }
      }
      return 0.0;
    case BicType::CvcPerfect:
    case BicType::Cvc:
      for (Index j : bic.cols) {
        double lo = cell(bic.rows.front(), j), hi = lo;
        for (Index i : bic.rows) lo = std::min(lo, cell(i, j)), hi = std::max(hi, cell(i, j));
        widen(lo, hi);
      }
      return worst;
    case BicType::CvrPerfect:
    case BicType::Cvr:
      for (Index i : bic.rows) {
        double lo = cell(i, bic.cols.front()), hi = lo;
        for (Index j : bic.cols) lo = std::min(lo, cell(i, j)), hi = std::max(hi, cell(i, j));
        widen(lo, hi);
      }
      return worst;
    case BicType::ChvPerfect:
    case BicType::Chv:
      for (std::size_t a = 0; a < bic.cols.size(); ++a) {
        for (std::size_t b = a + 1; b < bic.cols.size(); ++b) {
          auto z = [&](Index i) { return cell(i, bic.cols[a]) - cell(i, bic.cols[b]); };
          double lo = z(bic.rows.front()), hi = lo;
          for (Index i : bic.rows) lo = std::min(lo, z(i)), hi = std::max(hi, z(i));
          widen(lo, hi);
        }
      }
      return worst;
  }
  return worst;
}

bool is_maximal(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params) {
  if (!is_valid(matrix, bic, params)) {
    throw std::invalid_argument("is_maximal called on a bicluster that is not valid");
  }
  for (Index g = 0; g < matrix.rows(); ++g) {
    if (std::binary_search(bic.rows.begin(), bic.rows.end(), g)) continue;
    if (valid_unchecked(matrix, with_extra(bic.rows, g), bic.cols, params)) return false;
  }
  for (Index y = 0; y < matrix.cols(); ++y) {
    if (std::binary_search(bic.cols.begin(), bic.cols.end(), y)) continue;
    if (valid_unchecked(matrix, bic.rows, with_extra(bic.cols, y), params)) return false;
  }
  return true;
}

NumericMatrix transform_for_model(const NumericMatrix& matrix, Model model) {
  if (model == Model::Shift) return matrix;
  std::vector<double> out(matrix.values().size());
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) {
      const double v = matrix(i, j);
      if (!(v > 0.0)) {
        throw std::domain_error("scale model needs positive entries; cell (" +
                                std::to_string(i) + "," + std::to_string(j) + ") is " +
                                std::to_string(v));
      }
      out[i * matrix.cols() + j] = std::log(v);
    }
  }
  return NumericMatrix(matrix.rows(), matrix.cols(), std::move(out));
}

}  // namespace rinclose
