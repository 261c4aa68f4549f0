#pragma once

#include "rinclose/matrix.hpp"

namespace rinclose {

/// In-flight enumeration state for the close-by-one family. `intent` holds
/// inherited attributes plus those absorbed so far; `check_rows` are the rows
/// a descendant must test before it can claim row-maximality (always empty
/// for In-Close2 and the perfect variants).
struct SearchNode {
  IndexList extent;
  IndexList intent;
  Index start = 0;
  IndexList check_rows;
};

}  // namespace rinclose
