#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

struct RowValue {
  Index row;
  double value;
};

/// Inclusive position range [first, last] into a value-sorted row list.
struct Window {
  std::size_t first;
  std::size_t last;
  std::size_t size() const noexcept { return last - first + 1; }
};

/// Sorts by (value, row id) so runs of equal values have a fixed order.
void sort_by_value(std::vector<RowValue>& rows);

/// Every window of a value-sorted list whose spread is <= epsilon and that
/// cannot grow on either side, in ascending start order. No two windows share
/// both boundaries.
std::vector<Window> maximal_windows(std::span<const RowValue> sorted, double epsilon);

/// Row sets of the maximal windows, each sorted by row id. The input need not
/// be sorted. A window covering every input row may be returned.
std::vector<IndexList> candidate_extents(std::vector<RowValue> rows, double epsilon);

/// False iff some column k < j outside `intent` has spread <= epsilon over
/// `rw`. `intent` is a membership mask over the matrix columns.
bool is_canonical_cvc(const NumericMatrix& matrix, const IndexList& rw,
                      const std::vector<char>& intent, Index j, double epsilon);

/// Rows outside `window` that could still join a descendant of it holding
/// at least `min_row` of its rows: values inside
/// [v_lo - epsilon, v_hi + epsilon], where v_lo is the min_row-th value from
/// the window start and v_hi the min_row-th from its end. Sorted by row id.
/// Throws std::invalid_argument when the window is shorter than min_row.
IndexList compute_rm(std::span<const RowValue> sorted, Window window, std::size_t min_row,
                     double epsilon);

/// False iff some row of `check_rows` can join `extent` keeping spread <=
/// epsilon on every column of `intent`.
bool is_row_maximal_cvc(const NumericMatrix& matrix, const IndexList& extent,
                        const IndexList& intent, const IndexList& check_rows, double epsilon);

/// Canonical byte string of a sorted id list; equal keys iff equal lists.
std::string encode_key(std::span<const Index> ids);
/// Key of an (extent, intent) pair.
std::string encode_key(const Bicluster& bic);

/// Membership set with insert-if-absent semantics. Not synchronized: one
/// registry per enumeration call. A concurrent variant would need an atomic
/// insert-if-absent.
class ExtentRegistry {
 public:
  /// True if the key was new.
  bool insert(const std::string& key) { return keys_.insert(key).second; }
  bool insert(std::span<const Index> ids) { return insert(encode_key(ids)); }
  bool contains(std::span<const Index> ids) const { return keys_.count(encode_key(ids)) > 0; }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::unordered_set<std::string> keys_;
};

struct CvcOptions {
  double epsilon = 0.0;
  std::size_t min_row = 1;
  std::size_t min_col = 1;
  /// Perfect mode skips the registry and RM bookkeeping: equal-value windows
  /// never overlap.
  bool perfect = true;
  /// Only for differential testing; without it duplicates may be emitted.
  bool use_registry = true;
};

/// RIn-Close for constant-on-columns biclusters. All maximal CVC biclusters
/// with |I| >= min_row, |J| >= min_col and residue <= epsilon, each once.
BiclusterSolution enumerate_cvc(const NumericMatrix& matrix, const CvcOptions& options);

/// Dispatches cvc-p / cvc directly and cvr-p / cvr through the transpose.
/// Throws std::invalid_argument for other types or invalid params.
BiclusterSolution enumerate_cvc(const NumericMatrix& matrix, const EnumParams& params);

}  // namespace rinclose
