#pragma once

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

/// Runs the enumerator for `params.type`: In-Close2 for ctv-binary, the
/// CVC engine for cvc/cvr (cvr on the transpose), and the CHV pipeline for
/// chv types. Validates params first.
BiclusterSolution enumerate(const NumericMatrix& matrix, const EnumParams& params);

}  // namespace rinclose
