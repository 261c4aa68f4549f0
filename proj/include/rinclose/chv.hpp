#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rinclose/bicluster.hpp"
#include "rinclose/cliques.hpp"
#include "rinclose/cvc.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

/// All pairwise column differences of a matrix. Column index c stands for
/// the pair (j, l), j < l, in lexicographic order (0,1), (0,2), ..., (1,2), ...
/// and holds a_ij - a_il.
class AugmentedMatrix {
 public:
  AugmentedMatrix(NumericMatrix diffs, std::size_t source_cols);

  const NumericMatrix& matrix() const noexcept { return diffs_; }
  std::size_t source_cols() const noexcept { return source_cols_; }
  std::pair<Index, Index> pair_of(Index col) const { return pairs_.at(col); }
  /// 0-based column of pair (j, l); requires j < l < source_cols.
  Index column_of(Index j, Index l) const;

 private:
  NumericMatrix diffs_;
  std::size_t source_cols_;
  std::vector<std::pair<Index, Index>> pairs_;
};

/// Throws std::invalid_argument when the matrix has fewer than 2 columns.
AugmentedMatrix build_augmented(const NumericMatrix& matrix);

/// Coherence graph of one CVC bicluster over the augmented matrix: vertices
/// are the original columns touched by its intent (B2, ascending), remapped
/// to 0..|B2|-1; edges are the intent's pairs.
struct CoherenceGraph {
  IndexList columns;
  UndirectedGraph graph;
};

CoherenceGraph coherence_graph(const IndexList& pair_intent, const AugmentedMatrix& aug);

/// Perfect shifting biclusters via the pivot-column method. Each pivot p
/// seeds (all rows, {p}) and explores only columns > p; coherence is tested
/// against the pivot alone.
BiclusterSolution enumerate_chv_perfect(const NumericMatrix& matrix, std::size_t min_row,
                                        std::size_t min_col);

/// Step 3 for one maximal CVC bicluster over the augmented matrix: maximal
/// cliques of its coherence graph with at least min_col vertices become
/// candidates (extent, clique). A candidate is kept if the clique is all of
/// B2 or no outside row can join it; `emitted` drops repeats across calls.
std::vector<Bicluster> extract_chv_from_cvc(const Bicluster& cvc_bic, const AugmentedMatrix& aug,
                                            const NumericMatrix& matrix, double epsilon,
                                            std::size_t min_col, ExtentRegistry& emitted);

/// chv-p or chv, applying the scale transform first when requested.
/// Throws std::invalid_argument for non-CHV types or invalid params (for chv
/// with epsilon 0 the message points at chv-p).
BiclusterSolution enumerate_chv(const NumericMatrix& matrix, const EnumParams& params);

}  // namespace rinclose
