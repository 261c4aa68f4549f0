#include "rinclose/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinclose/validity.hpp"

namespace rinclose {

namespace {

using Mask = std::uint32_t;

IndexList ids_of(std::uint64_t mask) {
  IndexList out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<Index>(std::countr_zero(mask)));
  return out;
}

bool within(double a, double b, double eps) { return std::max(a, b) - std::min(a, b) <= eps; }

class Oracle {
 public:
  Oracle(const NumericMatrix& matrix, const EnumParams& params)
      : a_(matrix), p_(params), n_(matrix.rows()), m_(matrix.cols()) {
    for (Index j = 0; j < m_; ++j) {
      for (Index l = j + 1; l < m_; ++l) pair_index_.push_back({j, l});
    }
    precompute_compat();
  }

  std::vector<Bicluster> run() {
    std::set<Bicluster> found;
    for (std::uint32_t cols = 1; cols < (std::uint32_t{1} << m_); ++cols) {
      if (static_cast<std::size_t>(std::popcount(cols)) < p_.min_col) continue;
      const IndexList intent = ids_of(cols);
      Mask ok = 0;
      for (Index i = 0; i < n_; ++i) {
        if (self_ok(i, cols)) ok |= Mask{1} << i;
      }
      std::vector<Mask> nbr(n_, 0);
      for (Index i = 0; i < n_; ++i) {
        for (Index k = 0; k < n_; ++k) {
          if (k != i && compatible(i, k, cols)) nbr[i] |= Mask{1} << k;
        }
      }
      std::vector<Mask> row_sets;
      maximal_row_sets(0, ok, 0, nbr, row_sets);
      for (Mask rows : row_sets) {
        if (static_cast<std::size_t>(std::popcount(rows)) < p_.min_row) continue;
        Bicluster b{ids_of(rows), intent};
        if (!column_extendable(b)) found.insert(std::move(b));
      }
    }
    return {found.begin(), found.end()};
  }

 private:
  // A row on its own: only CVR (row spread) and CTV (all ones) constrain it.
  bool self_ok(Index i, std::uint32_t cols) const {
    switch (p_.type) {
      case BicType::CtvBinary:
        for (Index j : ids_of(cols)) {
          if (a_(i, j) != 1.0) return false;
        }
        return true;
      case BicType::CvrPerfect:
      case BicType::Cvr: {
        double lo = 0, hi = 0;
        bool first = true;
        for (Index j : ids_of(cols)) {
          lo = first ? a_(i, j) : std::min(lo, a_(i, j));
          hi = first ? a_(i, j) : std::max(hi, a_(i, j));
          first = false;
        }
        return hi - lo <= p_.epsilon;
      }
      default:
        return true;
    }
  }

  // Spread over a set is the widest pairwise gap, so validity of CVC and CHV
  // reduces to pairwise row compatibility.
  void precompute_compat() {
    col_ok_.assign(n_ * n_, 0);
    for (Index i = 0; i < n_; ++i) {
      for (Index k = 0; k < n_; ++k) {
        std::uint64_t bits = 0;
        if (is_chv(p_.type)) {
          for (std::size_t c = 0; c < pair_index_.size(); ++c) {
            const auto [j, l] = pair_index_[c];
            if (within(a_(i, j) - a_(i, l), a_(k, j) - a_(k, l), p_.epsilon)) {
              bits |= std::uint64_t{1} << c;
            }
          }
        } else {
          for (Index j = 0; j < m_; ++j) {
            if (within(a_(i, j), a_(k, j), p_.epsilon)) bits |= std::uint64_t{1} << j;
          }
        }
        col_ok_[i * n_ + k] = bits;
      }
    }
  }

  bool compatible(Index i, Index k, std::uint32_t cols) const {
    switch (p_.type) {
      case BicType::CtvBinary:
      case BicType::CvrPerfect:
      case BicType::Cvr:
        return true;
      case BicType::ChvPerfect:
      case BicType::Chv: {
        std::uint64_t need = 0;
        for (std::size_t c = 0; c < pair_index_.size(); ++c) {
          const auto [j, l] = pair_index_[c];
          if (((cols >> j) & 1U) && ((cols >> l) & 1U)) need |= std::uint64_t{1} << c;
        }
        return (col_ok_[i * n_ + k] & need) == need;
      }
      default:
        return (col_ok_[i * n_ + k] & cols) == cols;
    }
  }

  // Plain Bron-Kerbosch over rows: every maximal pairwise-compatible row set.
  void maximal_row_sets(Mask r, Mask p, Mask x, const std::vector<Mask>& nbr,
                        std::vector<Mask>& out) const {
    if (p == 0) {
      if (x == 0 && r != 0) out.push_back(r);
      return;
    }
    while (p) {
      const Index v = static_cast<Index>(std::countr_zero(p));
      const Mask bit = Mask{1} << v;
      maximal_row_sets(r | bit, p & nbr[v], x & nbr[v], nbr, out);
      p &= ~bit;
      x |= bit;
    }
  }

  bool column_extendable(const Bicluster& b) const {
    for (Index y = 0; y < m_; ++y) {
      if (std::binary_search(b.cols.begin(), b.cols.end(), y)) continue;
      Bicluster wider = b;
      wider.cols.insert(std::upper_bound(wider.cols.begin(), wider.cols.end(), y), y);
      if (is_valid(a_, wider, p_)) return true;
    }
    return false;
  }

  const NumericMatrix& a_;
  EnumParams p_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::pair<Index, Index>> pair_index_;
  std::vector<std::uint64_t> col_ok_;
};

}  // namespace

BiclusterSolution oracle_enumerate(const NumericMatrix& matrix, const EnumParams& params) {
  params.validate();
  const std::size_t max_cols = params.type == BicType::CtvBinary ? 16 : 10;
  if (matrix.rows() > 16 || matrix.cols() > max_cols) {
    throw std::invalid_argument("oracle is limited to 16 rows and " + std::to_string(max_cols) +
                                " columns; got " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()));
  }
  const auto t0 = std::chrono::steady_clock::now();
  EnumParams additive = params;
  additive.model = Model::Shift;
  const NumericMatrix data =
      is_chv(params.type) ? transform_for_model(matrix, params.model) : matrix;

  BiclusterSolution solution;
  solution.params = params;
  solution.biclusters = Oracle(data, additive).run();
  solution.stats.biclusters = solution.biclusters.size();
  solution.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return solution;
}

}  // namespace rinclose
