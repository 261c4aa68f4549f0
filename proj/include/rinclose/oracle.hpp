#pragma once

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

/// Brute-force ground truth for every bicluster type. For each column subset
/// J it finds all maximal row sets valid on J, keeps those no single column
/// can extend, and returns the resulting exact set of maximal biclusters,
/// sorted. Exponential by design and independent of the enumerators.
///
/// Size guard: n <= 16 and m <= 10 (m <= 16 for ctv-binary); otherwise
/// std::invalid_argument.
BiclusterSolution oracle_enumerate(const NumericMatrix& matrix, const EnumParams& params);

}  // namespace rinclose
