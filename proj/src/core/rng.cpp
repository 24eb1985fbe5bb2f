#include "core/rng.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tsbm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ (0x9E3779B97F4A7C15ull * (index + 1));
  return splitmix64(state);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound < 2) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  std::uint64_t x;
  do {
    x = engine_() & mask;
  } while (x >= bound);
  return x;
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::multinomial(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("multinomial weights must be non-negative and finite");
    total += w;
  }
  if (weights.empty() || total <= 0.0)
    throw std::invalid_argument("multinomial needs a positive total weight");
  double target = uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

std::int64_t Rng::poisson(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("poisson rate must be finite and non-negative");
  if (lambda == 0.0) return 0;
  return lambda < 10.0 ? poisson_inversion(lambda) : poisson_ptrs(lambda);
}

std::int64_t Rng::poisson_inversion(double lambda) {
  const double u = uniform01();
  double p = std::exp(-lambda);
  double cdf = p;
  std::int64_t k = 0;
  while (u > cdf && k < 2000) {
    ++k;
    p *= lambda / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

// Hormann's PTRS transformed-rejection sampler, valid for lambda >= 10.
std::int64_t Rng::poisson_ptrs(double lambda) {
  const double log_lambda = std::log(lambda);
  const double b = 0.931 + 2.53 * std::sqrt(lambda);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  while (true) {
    const double u = uniform01() - 0.5;
    const double v = uniform01();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * log_lambda - lambda - std::lgamma(kf + 1.0))
      return static_cast<std::int64_t>(kf);
  }
}

}  // namespace tsbm
