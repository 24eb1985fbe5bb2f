#pragma once

#include <cmath>
#include <cstdint>

namespace tsbm {

// log(n!) through lgamma. Called with the same n it always returns the same
// bits, so incremental add/subtract bookkeeping cancels cleanly.
inline double log_factorial(std::int64_t n) {
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace tsbm
