#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rinclose/matrix.hpp"

namespace rinclose {

/// A submatrix (extent, intent). Both index lists are strictly increasing.
/// Indices are 0-based: row g1 of a published table is row 0 here.
struct Bicluster {
  IndexList rows;
  IndexList cols;

  std::size_t volume() const noexcept { return rows.size() * cols.size(); }

  auto operator<=>(const Bicluster&) const = default;
  bool operator==(const Bicluster&) const = default;
};

/// Sorts and deduplicates both lists. Throws std::invalid_argument when
/// either side ends up empty.
Bicluster make_bicluster(IndexList rows, IndexList cols);

/// Returns a copy with extent and intent exchanged (for transposed runs).
Bicluster swapped(const Bicluster& bic);

enum class BicType { CtvBinary, CvcPerfect, Cvc, CvrPerfect, Cvr, ChvPerfect, Chv };

/// Shift mines additive coherence directly; scale mines multiplicative
/// coherence on the elementwise natural log. Only consulted by CHV types.
enum class Model { Shift, Scale };

std::string_view to_string(BicType type);
std::string_view to_string(Model model);
/// Throws std::invalid_argument for unknown names.
BicType parse_bic_type(std::string_view name);
Model parse_model(std::string_view name);

bool is_perfect(BicType type) noexcept;
bool is_chv(BicType type) noexcept;

struct EnumParams {
  double epsilon = 0.0;
  std::size_t min_row = 1;
  std::size_t min_col = 1;
  BicType type = BicType::CvcPerfect;
  Model model = Model::Shift;

  /// Throws std::invalid_argument naming the violated rule: perfect types
  /// need epsilon == 0, perturbed types need epsilon > 0, CHV types need
  /// min_col >= 2, and both minimums are at least 1.
  void validate() const;
};

struct EnumStats {
  std::size_t biclusters = 0;
  std::size_t nodes = 0;
  double seconds = 0.0;
};

struct BiclusterSolution {
  std::vector<Bicluster> biclusters;
  EnumParams params;
  EnumStats stats;
};

/// Biclusters sorted lexicographically by (rows, cols); used for set comparison.
std::vector<Bicluster> sorted_set(std::vector<Bicluster> bics);

}  // namespace rinclose
