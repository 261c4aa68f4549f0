#include "rinclose/enumerate.hpp"

#include <chrono>

#include "rinclose/chv.hpp"
#include "rinclose/cvc.hpp"
#include "rinclose/inclose2.hpp"

namespace rinclose {

BiclusterSolution enumerate(const NumericMatrix& matrix, const EnumParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();
  BiclusterSolution solution;
  switch (params.type) {
    case BicType::CtvBinary:
      solution = enumerate_ctv_binary(BinaryContext(matrix), params.min_row, params.min_col);
      break;
    case BicType::ChvPerfect:
    case BicType::Chv:
      solution = enumerate_chv(matrix, params);
      break;
    default:
      solution = enumerate_cvc(matrix, params);
      break;
  }
  solution.params = params;
  solution.stats.biclusters = solution.biclusters.size();
  solution.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return solution;
}

}  // namespace rinclose
