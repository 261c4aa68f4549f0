#include "rinclose/bicluster.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace rinclose {

namespace {

void normalize(IndexList& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

constexpr std::array<std::pair<BicType, std::string_view>, 7> kTypeNames{{
    {BicType::CtvBinary, "ctv-binary"},
    {BicType::CvcPerfect, "cvc-p"},
    {BicType::Cvc, "cvc"},
    {BicType::CvrPerfect, "cvr-p"},
    {BicType::Cvr, "cvr"},
    {BicType::ChvPerfect, "chv-p"},
    {BicType::Chv, "chv"},
}};

}  // namespace

Bicluster make_bicluster(IndexList rows, IndexList cols) {
  normalize(rows);
  normalize(cols);
  if (rows.empty() || cols.empty()) {
    throw std::invalid_argument("bicluster needs a nonempty extent and intent");
  }
  return Bicluster{std::move(rows), std::move(cols)};
}

Bicluster swapped(const Bicluster& bic) { return Bicluster{bic.cols, bic.rows}; }

std::string_view to_string(BicType type) {
  for (const auto& [t, name] : kTypeNames) {
    if (t == type) return name;
  }
  return "unknown";
}

std::string_view to_string(Model model) { return model == Model::Shift ? "shift" : "scale"; }

BicType parse_bic_type(std::string_view name) {
  for (const auto& [t, n] : kTypeNames) {
    if (n == name) return t;
  }
  throw std::invalid_argument("unknown bicluster type '" + std::string(name) + "'");
}

Model parse_model(std::string_view name) {
  if (name == "shift") return Model::Shift;
  if (name == "scale") return Model::Scale;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

bool is_perfect(BicType type) noexcept {
  return type == BicType::CvcPerfect || type == BicType::CvrPerfect ||
         type == BicType::ChvPerfect;
}

bool is_chv(BicType type) noexcept { return type == BicType::ChvPerfect || type == BicType::Chv; }

void EnumParams::validate() const {
  if (min_row < 1 || min_col < 1) {
    throw std::invalid_argument("min_row and min_col must be at least 1");
  }
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
  const std::string name(to_string(type));
  if (is_perfect(type) && epsilon != 0.0) {
    throw std::invalid_argument(name + " mines perfect biclusters and needs epsilon = 0");
  }
  if (!is_perfect(type) && type != BicType::CtvBinary && epsilon == 0.0) {
    throw std::invalid_argument(name + " needs epsilon > 0; use " + name +
                                "-p for perfect biclusters");
  }
  if (is_chv(type) && min_col < 2) {
    throw std::invalid_argument(name + " needs min_col >= 2 (single-column coherence is vacuous)");
  }
}

std::vector<Bicluster> sorted_set(std::vector<Bicluster> bics) {
  std::sort(bics.begin(), bics.end());
  return bics;
}

}  // namespace rinclose
