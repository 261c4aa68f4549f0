#include "rinclose/chv.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "close_by_one.hpp"
#include "rinclose/validity.hpp"

namespace rinclose {

AugmentedMatrix::AugmentedMatrix(NumericMatrix diffs, std::size_t source_cols)
    : diffs_(std::move(diffs)), source_cols_(source_cols) {
  for (Index j = 0; j < source_cols_; ++j) {
    for (Index l = j + 1; l < source_cols_; ++l) pairs_.emplace_back(j, l);
  }
  if (pairs_.size() != diffs_.cols()) {
    throw std::invalid_argument("augmented matrix width does not match source column count");
  }
}

Index AugmentedMatrix::column_of(Index j, Index l) const {
  if (!(j < l && l < source_cols_)) throw std::out_of_range("column pair out of range");
  const Index m = source_cols_;
  return j * (2 * m - j - 1) / 2 + (l - j - 1);
}

AugmentedMatrix build_augmented(const NumericMatrix& matrix) {
  const std::size_t m = matrix.cols();
  if (m < 2) throw std::invalid_argument("augmented matrix needs at least 2 columns");
  const std::size_t width = m * (m - 1) / 2;
  std::vector<double> values;
  values.reserve(matrix.rows() * width);
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < m; ++j) {
      for (Index l = j + 1; l < m; ++l) values.push_back(matrix(i, j) - matrix(i, l));
    }
  }
  return AugmentedMatrix(NumericMatrix(matrix.rows(), width, std::move(values)), m);
}

CoherenceGraph coherence_graph(const IndexList& pair_intent, const AugmentedMatrix& aug) {
  IndexList columns;
  for (Index c : pair_intent) {
    const auto [j, l] = aug.pair_of(c);
    columns.push_back(j);
    columns.push_back(l);
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  auto dense = [&](Index col) {
    return static_cast<Index>(std::lower_bound(columns.begin(), columns.end(), col) -
                              columns.begin());
  };
  UndirectedGraph graph(columns.size());
  for (Index c : pair_intent) {
    const auto [j, l] = aug.pair_of(c);
    graph.add_edge(dense(j), dense(l));
  }
  return CoherenceGraph{std::move(columns), std::move(graph)};
}

namespace {

struct PivotColumns {
  const NumericMatrix& matrix;
  Index pivot;
  std::size_t cols() const noexcept { return matrix.cols(); }
  double value(Index i, Index j) const noexcept { return matrix(i, pivot) - matrix(i, j); }
};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Row-maximality: no row outside the extent can join while every pair in `intent`
// keeps its difference spread <= epsilon.
bool row_maximal_chv(const NumericMatrix& matrix, const IndexList& extent,
                     const IndexList& intent, double epsilon) {
  struct PairRange {
    Index j, l;
    double lo, hi;
  };
  std::vector<PairRange> ranges;
  for (std::size_t a = 0; a < intent.size(); ++a) {
    for (std::size_t b = a + 1; b < intent.size(); ++b) {
      PairRange r{intent[a], intent[b], 0.0, 0.0};
      r.lo = r.hi = matrix(extent.front(), r.j) - matrix(extent.front(), r.l);
      for (Index i : extent) {
        const double z = matrix(i, r.j) - matrix(i, r.l);
        r.lo = std::min(r.lo, z);
        r.hi = std::max(r.hi, z);
      }
      ranges.push_back(r);
    }
  }
  for (Index g = 0; g < matrix.rows(); ++g) {
    if (std::binary_search(extent.begin(), extent.end(), g)) continue;
    bool joins = true;
    for (const auto& r : ranges) {
      const double z = matrix(g, r.j) - matrix(g, r.l);
      if (std::max(r.hi, z) - std::min(r.lo, z) > epsilon) {
        joins = false;
        break;
      }
    }
    if (joins) return false;
  }
  return true;
}

}  // namespace

BiclusterSolution enumerate_chv_perfect(const NumericMatrix& matrix, std::size_t min_row,
                                        std::size_t min_col) {
  BiclusterSolution solution;
  solution.params = EnumParams{0.0, min_row, min_col, BicType::ChvPerfect, Model::Shift};
  solution.params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = matrix.cols();
  const detail::EngineOptions opt{0.0, min_row, min_col, false, false};

  IndexList all_rows(matrix.rows());
  for (Index i = 0; i < all_rows.size(); ++i) all_rows[i] = i;

  for (Index pivot = 0; pivot + 1 < m; ++pivot) {
    const PivotColumns source{matrix, pivot};
    detail::CloseByOne<PivotColumns> engine(
        source, opt, [&](const IndexList& extent, const IndexList& intent) {
          solution.biclusters.push_back({extent, intent});
        });
    // A column before the pivot that is coherent with it over every row
    // belongs to all biclusters seeded here; they are found under that column.
    std::vector<char> seed_intent(m, 0);
    seed_intent[pivot] = 1;
    if (!engine.canonical(all_rows, seed_intent, pivot)) continue;
    engine.run(SearchNode{all_rows, {pivot}, pivot + 1, {}});
    solution.stats.nodes += engine.nodes();
  }
  solution.stats.biclusters = solution.biclusters.size();
  solution.stats.seconds = elapsed_since(t0);
  return solution;
}

std::vector<Bicluster> extract_chv_from_cvc(const Bicluster& cvc_bic, const AugmentedMatrix& aug,
                                            const NumericMatrix& matrix, double epsilon,
                                            std::size_t min_col, ExtentRegistry& emitted) {
  std::vector<Bicluster> out;
  const CoherenceGraph cg = coherence_graph(cvc_bic.cols, aug);
  for (const IndexList& clique : maximal_cliques(cg.graph)) {
    if (clique.size() < min_col || clique.size() < 2) continue;
    Bicluster cand{cvc_bic.rows, {}};
    for (Index v : clique) cand.cols.push_back(cg.columns[v]);
    const bool keep = cand.cols.size() == cg.columns.size() ||
                      row_maximal_chv(matrix, cand.rows, cand.cols, epsilon);
    if (keep && emitted.insert(encode_key(cand))) out.push_back(std::move(cand));
  }
  return out;
}

BiclusterSolution enumerate_chv(const NumericMatrix& matrix, const EnumParams& params) {
  if (!is_chv(params.type)) throw std::invalid_argument("enumerate_chv handles chv-p and chv only");
  params.validate();
  const NumericMatrix data = transform_for_model(matrix, params.model);

  if (params.type == BicType::ChvPerfect) {
    auto sol = enumerate_chv_perfect(data, params.min_row, params.min_col);
    sol.params = params;
    return sol;
  }

  const auto t0 = std::chrono::steady_clock::now();
  BiclusterSolution solution;
  solution.params = params;
  const AugmentedMatrix aug = build_augmented(data);
  // A c-column shifting bicluster needs c(c-1)/2 coherent pairs over D_a.
  const std::size_t pairs_needed = params.min_col * (params.min_col - 1) / 2;
  const BiclusterSolution cvc = enumerate_cvc(
      aug.matrix(), CvcOptions{params.epsilon, params.min_row, pairs_needed, false, true});
  ExtentRegistry emitted;
  for (const Bicluster& b : cvc.biclusters) {
    auto found = extract_chv_from_cvc(b, aug, data, params.epsilon, params.min_col, emitted);
    for (auto& f : found) solution.biclusters.push_back(std::move(f));
  }
  solution.stats.nodes = cvc.stats.nodes;
  solution.stats.biclusters = solution.biclusters.size();
  solution.stats.seconds = elapsed_since(t0);
  return solution;
}

}  // namespace rinclose
