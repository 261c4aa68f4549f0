#include "rinclose/inclose2.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace rinclose {

BinaryContext::BinaryContext(NumericMatrix matrix) : matrix_(std::move(matrix)) {
  for (Index i = 0; i < matrix_.rows(); ++i) {
    for (Index j = 0; j < matrix_.cols(); ++j) {
      const double v = matrix_(i, j);
      if (v != 0.0 && v != 1.0) {
        throw std::invalid_argument("binary context cell (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not 0 or 1");
      }
    }
  }
}

IndexList derive_attr(const BinaryContext& context, Index col) {
  if (col >= context.attributes()) {
    throw std::out_of_range("attribute " + std::to_string(col) + " out of range");
  }
  IndexList out;
  for (Index g = 0; g < context.objects(); ++g) {
    if (context.incident(g, col)) out.push_back(g);
  }
  return out;
}

namespace {

class InClose2 {
 public:
  InClose2(const BinaryContext& ctx, std::size_t min_row, std::size_t min_col,
           BiclusterSolution& out)
      : ctx_(ctx), min_row_(min_row), min_col_(min_col), out_(out) {}

  void run() {
    IndexList all(ctx_.objects());
    for (Index g = 0; g < all.size(); ++g) all[g] = g;
    if (all.size() < min_row_) return;
    std::vector<char> intent(ctx_.attributes(), 0);
    close(all, intent, 0);
  }

 private:
  struct Child {
    Index attr;
    IndexList extent;
  };

  // Canonical iff no attribute k < j outside B is shared by every row of RW.
  bool canonical(const IndexList& extent, const std::vector<char>& intent, Index j) const {
    for (Index k = 0; k < j; ++k) {
      if (intent[k]) continue;
      const bool shared = std::all_of(extent.begin(), extent.end(),
                                      [&](Index g) { return ctx_.incident(g, k); });
      if (shared) return false;
    }
    return true;
  }

  void close(const IndexList& extent, std::vector<char>& intent, Index start) {
    ++out_.stats.nodes;
    const std::size_t m = ctx_.attributes();
    std::size_t intent_size = std::count(intent.begin(), intent.end(), 1);
    std::size_t open_left = 0;
    for (Index j = start; j < m; ++j) open_left += intent[j] ? 0 : 1;

    std::vector<Child> children;
    IndexList rw;
    for (Index j = start; j < m; ++j) {
      if (intent[j]) continue;
      if (intent_size + open_left < min_col_) break;
      --open_left;
      rw.clear();
      for (Index g : extent) {
        if (ctx_.incident(g, j)) rw.push_back(g);
      }
      if (rw.size() < min_row_) continue;
      if (rw.size() == extent.size()) {
        intent[j] = 1;
        ++intent_size;
      } else if (canonical(rw, intent, j)) {
        children.push_back({j, rw});
      }
    }

    if (intent_size >= min_col_) {
      IndexList cols;
      for (Index j = 0; j < m; ++j) {
        if (intent[j]) cols.push_back(j);
      }
      out_.biclusters.push_back({extent, std::move(cols)});
    }

    for (auto& child : children) {
      std::vector<char> child_intent = intent;
      child_intent[child.attr] = 1;
      close(child.extent, child_intent, child.attr + 1);
    }
  }

  const BinaryContext& ctx_;
  std::size_t min_row_;
  std::size_t min_col_;
  BiclusterSolution& out_;
};

}  // namespace

BiclusterSolution enumerate_ctv_binary(const BinaryContext& context, std::size_t min_row,
                                       std::size_t min_col) {
  BiclusterSolution solution;
  solution.params = EnumParams{0.0, min_row, min_col, BicType::CtvBinary, Model::Shift};
  solution.params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  InClose2(context, min_row, min_col, solution).run();
  solution.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  solution.stats.biclusters = solution.biclusters.size();
  return solution;
}

}  // namespace rinclose
