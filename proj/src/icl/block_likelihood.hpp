#pragma once

#include <cmath>
#include <cstdint>

#include "core/priors.hpp"

namespace tsbm {

// Log marginal likelihood of one block under the Gamma(a, b) intensity
// prior, with S the block count sum, logP the summed log-factorials of the
// block's cells and R the number of cells (the Poisson exposure):
//
//   a*log(b) - lgamma(a) - logP + lgamma(S + a) - (S + a) * log(R + b)
//
// An empty block (S = 0, logP = 0, R = 0) evaluates to exactly 0.
inline double log_block_likelihood(std::int64_t S, double logP, std::int64_t R,
                                   const Priors& pr) {
  const double s_plus_a = static_cast<double>(S) + pr.a;
  return pr.a * std::log(pr.b) - std::lgamma(pr.a) - logP + std::lgamma(s_plus_a) -
         s_plus_a * std::log(static_cast<double>(R) + pr.b);
}

}  // namespace tsbm
