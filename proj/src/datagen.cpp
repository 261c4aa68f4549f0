#include "rinclose/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "rinclose/validity.hpp"

namespace rinclose {

namespace {

double dyadic(std::mt19937_64& rng, double hi) {
  std::uniform_real_distribution<double> u(0.0, hi);
  return std::floor(u(rng) * 1024.0) / 1024.0;
}

std::size_t shared(double fraction, std::size_t size) {
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(size)));
}

std::size_t span_needed(std::size_t count, std::size_t size, std::size_t share) {
  return count == 0 ? 0 : size + (count - 1) * (size - share);
}

std::vector<Index> inverse(const std::vector<Index>& perm) {
  std::vector<Index> inv(perm.size());
  for (Index p = 0; p < perm.size(); ++p) inv[perm[p]] = p;
  return inv;
}

}  // namespace

std::string_view to_string(Pattern pattern) {
  return pattern == Pattern::Cvc ? "cvc" : "chv-shift";
}

Pattern parse_pattern(std::string_view name) {
  if (name == "cvc") return Pattern::Cvc;
  if (name == "chv-shift") return Pattern::ChvShift;
  throw std::invalid_argument("unknown pattern '" + std::string(name) +
                              "' (expected cvc or chv-shift)");
}

void GenConfig::validate() const {
  if (n == 0 || m == 0) throw std::invalid_argument("matrix shape must be at least 1x1");
  if (!(overlap >= 0.0 && overlap < 1.0)) {
    throw std::invalid_argument("overlap must lie in [0, 1)");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw std::invalid_argument("noise sigma must be a finite nonnegative number");
  }
  if (num_bics == 0) return;
  if (bic_rows == 0 || bic_cols == 0) {
    throw std::invalid_argument("planted biclusters need at least one row and one column");
  }
  const std::size_t rows_needed = span_needed(num_bics, bic_rows, shared(overlap, bic_rows));
  if (rows_needed > n) {
    throw std::invalid_argument("planted biclusters need " + std::to_string(rows_needed) +
                                " rows but the matrix has " + std::to_string(n));
  }
  const std::size_t col_step = bic_cols - shared(overlap, bic_cols);
  if (num_bics > 1 && bic_cols + col_step > m) {
    throw std::invalid_argument("two consecutive planted biclusters need " +
                                std::to_string(bic_cols + col_step) +
                                " columns but the matrix has " + std::to_string(m));
  }
  if (bic_cols > m) {
    throw std::invalid_argument("planted biclusters are wider than the matrix");
  }
}

GeneratedData generate(const GenConfig& config) {
  config.validate();
  const std::size_t n = config.n;
  const std::size_t m = config.m;
  std::mt19937_64 rng(config.seed);

  std::vector<double> cells(n * m);
  std::uniform_real_distribution<double> background(0.0, 100.0);
  for (double& v : cells) v = background(rng);

  std::vector<double> col_base(m);
  std::vector<double> row_shift(n);
  for (double& v : col_base) v = dyadic(rng, 10.0);
  for (double& v : row_shift) v = dyadic(rng, 10.0);

  const std::size_t row_step = config.bic_rows - shared(config.overlap, config.bic_rows);
  const std::size_t col_step = config.bic_cols - shared(config.overlap, config.bic_cols);
  std::vector<Bicluster> planted;
  for (std::size_t l = 0; l < config.num_bics; ++l) {
    Bicluster b;
    for (std::size_t r = 0; r < config.bic_rows; ++r) b.rows.push_back(l * row_step + r);
    for (std::size_t c = 0; c < config.bic_cols; ++c) b.cols.push_back((l * col_step + c) % m);
    for (Index i : b.rows) {
      for (Index j : b.cols) {
        cells[i * m + j] =
            config.pattern == Pattern::Cvc ? col_base[j] : col_base[j] + row_shift[i];
      }
    }
    planted.push_back(std::move(b));
  }

  if (config.noise_sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, config.noise_sigma);
    for (double& v : cells) v += noise(rng);
  }

  std::vector<Index> row_perm(n);
  std::vector<Index> col_perm(m);
  std::iota(row_perm.begin(), row_perm.end(), Index{0});
  std::iota(col_perm.begin(), col_perm.end(), Index{0});
  std::shuffle(row_perm.begin(), row_perm.end(), rng);
  std::shuffle(col_perm.begin(), col_perm.end(), rng);

  std::vector<double> shuffled(n * m);
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < m; ++q) shuffled[p * m + q] = cells[row_perm[p] * m + col_perm[q]];
  }
  const auto row_pos = inverse(row_perm);
  const auto col_pos = inverse(col_perm);

  GeneratedData out{NumericMatrix(n, m, std::move(shuffled)), {}, {}};
  EnumParams params;
  params.type = config.pattern == Pattern::Cvc ? BicType::Cvc : BicType::Chv;
  params.min_row = config.bic_rows;
  params.min_col = config.bic_cols;
  for (const auto& b : planted) {
    IndexList rows;
    IndexList cols;
    for (Index i : b.rows) rows.push_back(row_pos[i]);
    for (Index j : b.cols) cols.push_back(col_pos[j]);
    Bicluster moved = make_bicluster(std::move(rows), std::move(cols));
    out.residues.push_back(residue(out.matrix, moved, params));
    params.epsilon = std::max(params.epsilon, out.residues.back());
    out.truth.biclusters.push_back(std::move(moved));
  }
  if (params.epsilon == 0.0) {
    params.type = config.pattern == Pattern::Cvc ? BicType::CvcPerfect : BicType::ChvPerfect;
  }
  out.truth.params = params;
  out.truth.stats.biclusters = out.truth.biclusters.size();
  return out;
}

}  // namespace rinclose
