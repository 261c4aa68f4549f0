#pragma once

// Shared close-by-one engine for the CVC family (and perfect CHV, through a
// column source that yields pivot differences).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "rinclose/cvc.hpp"
#include "rinclose/search_node.hpp"

namespace rinclose::detail {

/// Column source over a plain matrix.
struct MatrixColumns {
  const NumericMatrix& matrix;
  std::size_t cols() const noexcept { return matrix.cols(); }
  double value(Index i, Index j) const noexcept { return matrix(i, j); }
};

struct EngineOptions {
  double epsilon = 0.0;
  std::size_t min_row = 1;
  std::size_t min_col = 1;
  bool track_overlaps = false;  // registry + RM
  bool use_registry = true;
};

IndexList merge_sorted(const IndexList& a, const IndexList& b);

template <typename Source>
class CloseByOne {
 public:
  using Sink = std::function<void(const IndexList& extent, const IndexList& intent)>;

  CloseByOne(const Source& source, const EngineOptions& options, Sink sink)
      : src_(source), opt_(options), sink_(std::move(sink)) {}

  void run(SearchNode root) {
    if (root.extent.size() < opt_.min_row) return;
    if (opt_.track_overlaps && opt_.use_registry) registry_.insert(root.extent);
    close(root);
  }

  bool canonical(const IndexList& rw, const std::vector<char>& intent, Index j) const {
    for (Index k = 0; k < j; ++k) {
      if (intent[k]) continue;
      if (spread(rw, k) <= opt_.epsilon) return false;
    }
    return true;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  struct Child {
    Index attr;
    IndexList extent;
    IndexList check_rows;
  };

  double spread(const IndexList& rows, Index col) const {
    double lo = src_.value(rows.front(), col);
    double hi = lo;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double v = src_.value(rows[r], col);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      if (hi - lo > opt_.epsilon) break;
    }
    return hi - lo;
  }

  // No row of `check` may join `rw` on the columns of `intent` plus `extra`.
  bool row_maximal(const IndexList& rw, const std::vector<char>& intent, Index extra,
                   const IndexList& check) const {
    if (check.empty()) return true;
    std::vector<Index> cols;
    for (Index k = 0; k < intent.size(); ++k) {
      if (intent[k] || k == extra) cols.push_back(k);
    }
    std::vector<double> lo(cols.size());
    std::vector<double> hi(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      lo[c] = hi[c] = src_.value(rw.front(), cols[c]);
      for (Index g : rw) {
        const double v = src_.value(g, cols[c]);
        lo[c] = std::min(lo[c], v);
        hi[c] = std::max(hi[c], v);
      }
    }
    for (Index g : check) {
      bool joins = true;
      for (std::size_t c = 0; c < cols.size() && joins; ++c) {
        const double v = src_.value(g, cols[c]);
        joins = std::max(hi[c], v) - std::min(lo[c], v) <= opt_.epsilon;
      }
      if (joins) return false;
    }
    return true;
  }

  void close(const SearchNode& node) {
    ++nodes_;
    const std::size_t m = src_.cols();
    std::vector<char> intent(m, 0);
    for (Index k : node.intent) intent[k] = 1;
    std::size_t intent_size = node.intent.size();
    std::size_t open_left = 0;
    for (Index j = node.start; j < m; ++j) open_left += intent[j] ? 0 : 1;

    std::vector<Child> children;
    std::vector<RowValue> sorted;
    sorted.reserve(node.extent.size());
    for (Index j = node.start; j < m; ++j) {
      if (intent[j]) continue;
      // minCol prune: later children cannot reach min_col either.
      if (intent_size + open_left < opt_.min_col) break;
      --open_left;

      if (spread(node.extent, j) <= opt_.epsilon) {
        intent[j] = 1;
        ++intent_size;
        continue;
      }
      sorted.clear();
      for (Index g : node.extent) sorted.push_back({g, src_.value(g, j)});
      sort_by_value(sorted);
      for (const Window& w : maximal_windows(sorted, opt_.epsilon)) {
        if (w.size() < opt_.min_row) continue;
        IndexList rw;
        rw.reserve(w.size());
        for (std::size_t p = w.first; p <= w.last; ++p) rw.push_back(sorted[p].row);
        std::sort(rw.begin(), rw.end());
        if (!canonical(rw, intent, j)) continue;

        IndexList check;
        if (opt_.track_overlaps) {
          if (opt_.use_registry && registry_.contains(rw)) continue;
          check = merge_sorted(node.check_rows, compute_rm(sorted, w, opt_.min_row, opt_.epsilon));
          if (!row_maximal(rw, intent, j, check)) continue;
          if (opt_.use_registry) registry_.insert(rw);
        }
        children.push_back({j, std::move(rw), std::move(check)});
      }
    }

    IndexList closed;
    for (Index k = 0; k < m; ++k) {
      if (intent[k]) closed.push_back(k);
    }
    if (closed.size() >= opt_.min_col) sink_(node.extent, closed);

    for (auto& child : children) {
      SearchNode next;
      next.extent = std::move(child.extent);
      next.intent = closed;
      next.intent.insert(std::upper_bound(next.intent.begin(), next.intent.end(), child.attr),
                         child.attr);
      next.start = child.attr + 1;
      next.check_rows = std::move(child.check_rows);
      close(next);
    }
  }

  const Source& src_;
  EngineOptions opt_;
  Sink sink_;
  ExtentRegistry registry_;
  std::size_t nodes_ = 0;
};

}  // namespace rinclose::detail
