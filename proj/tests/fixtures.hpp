#pragma once

#include "rinclose/matrix.hpp"

namespace testing {

// Four genes by five conditions; row g1 is row 0, column m1 is column 0.
inline rinclose::NumericMatrix table1() {
  return {{1, 2, 2, 1, 6}, {2, 1, 1, 0, 6}, {2, 2, 1, 7, 6}, {8, 9, 2, 6, 7}};
}

}  // namespace testing
