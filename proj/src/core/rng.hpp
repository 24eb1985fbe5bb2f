#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tsbm {

// Stream seed for restart / replicate `index`, decorrelated from `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Random source used everywhere. The engine is std::mt19937_64, whose output
// sequence is pinned by the standard; all draws on top of it are implemented
// here so results do not depend on the standard library's distribution
// internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // unbiased integer in [0, bound); bound >= 1
  std::uint64_t below(std::uint64_t bound);

  // double in [0, 1) with 53 random bits
  double uniform01();

  // index drawn proportionally to `weights` (need not be normalized)
  int multinomial(std::span<const double> weights);

  // exact Poisson sample; sequential inversion below lambda = 10, a
  // transformed-rejection sampler above
  std::int64_t poisson(double lambda);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t n = v.size(); n > 1; --n)
      std::swap(v[n - 1], v[below(n)]);
  }

 private:
  std::int64_t poisson_inversion(double lambda);
  std::int64_t poisson_ptrs(double lambda);

  std::mt19937_64 engine_;
};

}  // namespace tsbm
