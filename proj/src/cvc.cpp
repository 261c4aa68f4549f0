#include "rinclose/cvc.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <stdexcept>

#include "close_by_one.hpp"

namespace rinclose {

namespace detail {

IndexList merge_sorted(const IndexList& a, const IndexList& b) {
  IndexList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

void sort_by_value(std::vector<RowValue>& rows) {
  std::sort(rows.begin(), rows.end(), [](const RowValue& a, const RowValue& b) {
    return a.value < b.value || (a.value == b.value && a.row < b.row);
  });
}

std::vector<Window> maximal_windows(std::span<const RowValue> sorted, double epsilon) {
  // far is the last position reachable from start p; a window is maximal
  // exactly when far strictly advances (else it extends one step left).
  std::vector<Window> out;
  std::size_t far = 0;
  std::size_t prev_far = 0;
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (far < p) far = p;
    while (far + 1 < sorted.size() && sorted[far + 1].value - sorted[p].value <= epsilon) ++far;
    if (p == 0 || far > prev_far) out.push_back({p, far});
    prev_far = far;
  }
  return out;
}

std::vector<IndexList> candidate_extents(std::vector<RowValue> rows, double epsilon) {
  sort_by_value(rows);
  std::vector<IndexList> out;
  for (const Window& w : maximal_windows(rows, epsilon)) {
    IndexList ids;
    for (std::size_t p = w.first; p <= w.last; ++p) ids.push_back(rows[p].row);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

bool is_canonical_cvc(const NumericMatrix& matrix, const IndexList& rw,
                      const std::vector<char>& intent, Index j, double epsilon) {
  if (rw.empty()) throw std::invalid_argument("canonicity test needs a nonempty extent");
  const detail::MatrixColumns cols{matrix};
  const detail::EngineOptions opt{epsilon, 1, 1, false, false};
  const detail::CloseByOne<detail::MatrixColumns> engine(cols, opt, nullptr);
  return engine.canonical(rw, intent, j);
}

IndexList compute_rm(std::span<const RowValue> sorted, Window window, std::size_t min_row,
                     double epsilon) {
  if (min_row == 0 || window.size() < min_row || window.last >= sorted.size()) {
    throw std::invalid_argument("RM window must hold at least min_row rows");
  }
  const double v_lo = sorted[window.first + min_row - 1].value;
  const double v_hi = sorted[window.last - (min_row - 1)].value;
  IndexList out;
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (p >= window.first && p <= window.last) continue;
    const double v = sorted[p].value;
    // Differences keep the comparison identical to the spread tests.
    if (v_lo - v <= epsilon && v - v_hi <= epsilon) out.push_back(sorted[p].row);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_row_maximal_cvc(const NumericMatrix& matrix, const IndexList& extent,
                        const IndexList& intent, const IndexList& check_rows, double epsilon) {
  if (extent.empty()) throw std::invalid_argument("row-maximality test needs a nonempty extent");
  for (Index g : check_rows) {
    bool joins = true;
    for (Index j : intent) {
      double lo = matrix(g, j);
      double hi = lo;
      for (Index i : extent) {
        lo = std::min(lo, matrix(i, j));
        hi = std::max(hi, matrix(i, j));
      }
      if (hi - lo > epsilon) {
        joins = false;
        break;
      }
    }
    if (joins) return false;
  }
  return true;
}

std::string encode_key(std::span<const Index> ids) {
  std::string key(ids.size() * sizeof(Index), '\0');
  if (!ids.empty()) std::memcpy(key.data(), ids.data(), key.size());
  return key;
}

std::string encode_key(const Bicluster& bic) {
  // Length prefix keeps the split between extent and intent unambiguous.
  const Index n = bic.rows.size();
  std::string key = encode_key(std::span<const Index>(&n, 1));
  key += encode_key(bic.rows);
  key += encode_key(bic.cols);
  return key;
}

BiclusterSolution enumerate_cvc(const NumericMatrix& matrix, const CvcOptions& options) {
  BiclusterSolution solution;
  solution.params = EnumParams{options.epsilon, options.min_row, options.min_col,
                               options.perfect ? BicType::CvcPerfect : BicType::Cvc,
                               Model::Shift};
  const auto t0 = std::chrono::steady_clock::now();

  const detail::MatrixColumns cols{matrix};
  const detail::EngineOptions opt{options.epsilon, options.min_row, options.min_col,
                                  !options.perfect, options.use_registry};
  detail::CloseByOne<detail::MatrixColumns> engine(
      cols, opt, [&](const IndexList& extent, const IndexList& intent) {
        solution.biclusters.push_back({extent, intent});
      });
  SearchNode root;
  root.extent.resize(matrix.rows());
  for (Index i = 0; i < matrix.rows(); ++i) root.extent[i] = i;
  engine.run(std::move(root));

  solution.stats.nodes = engine.nodes();
  solution.stats.biclusters = solution.biclusters.size();
  solution.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return solution;
}

BiclusterSolution enumerate_cvc(const NumericMatrix& matrix, const EnumParams& params) {
  params.validate();
  const bool rows_mode = params.type == BicType::CvrPerfect || params.type == BicType::Cvr;
  if (!rows_mode && params.type != BicType::CvcPerfect && params.type != BicType::Cvc) {
    throw std::invalid_argument("enumerate_cvc handles cvc-p, cvc, cvr-p and cvr only");
  }
  const bool perfect = is_perfect(params.type);
  if (!rows_mode) {
    auto sol = enumerate_cvc(matrix, CvcOptions{params.epsilon, params.min_row,
                                                params.min_col, perfect, true});
    sol.params = params;
    return sol;
  }
  // CVR on M is CVC on the transpose with the roles of rows and columns swapped.
  auto sol = enumerate_cvc(transpose(matrix), CvcOptions{params.epsilon, params.min_col,
                                                         params.min_row, perfect, true});
  for (auto& b : sol.biclusters) b = swapped(b);
  sol.params = params;
  return sol;
}

}  // namespace rinclose
