#pragma once

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose {

/// Residue test for the selected type, compared with an exact <= against
/// epsilon:
///   ctv-binary  every cell equals 1
///   cvc, cvc-p  max - min of each intent column over the extent
///   cvr, cvr-p  max - min of each extent row over the intent
///   chv, chv-p  max - min of (a_ij - a_il) over the extent, for every pair j < l
/// CHV under the scale model is evaluated on ln(a_ij).
/// Throws std::out_of_range for an index outside the matrix.
bool is_valid(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params);

/// Largest spread the residue test compares against epsilon (0 for a single
/// cell). For ctv-binary: 0 when every cell is 1, +infinity otherwise.
double residue(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params);

/// True iff no single row and no single column can be added while keeping
/// is_valid. Throws std::invalid_argument if `bic` is not valid.
bool is_maximal(const NumericMatrix& matrix, const Bicluster& bic, const EnumParams& params);

/// Shift returns the matrix unchanged; scale returns the elementwise natural
/// log. Throws std::domain_error naming the first nonpositive cell under scale.
NumericMatrix transform_for_model(const NumericMatrix& matrix, Model model);

}  // namespace rinclose
