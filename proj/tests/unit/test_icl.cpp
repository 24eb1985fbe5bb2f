#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/rng.hpp"
#include "icl/icl.hpp"
#include "support/reference.hpp"

using namespace tsbm;
using tsbm::testing::random_instance;
using tsbm::testing::reference_icl;

namespace {

// log of the Gamma-mixed Poisson block integral, by Simpson quadrature of
//   b^a / (Gamma(a) * P) * lambda^(S + a - 1) * exp(-lambda (R + b))
// over lambda. Peaks near (S + a - 1) / (R + b); integrating far past the
// peak is enough at these magnitudes.
double quadrature_log_block(std::int64_t S, double logP, std::int64_t R, const Priors& pr) {
  const double rate = static_cast<double>(R) + pr.b;
  const double upper = ((static_cast<double>(S) + pr.a) / rate + 10.0 / rate) * 10.0 + 10.0;
  const int steps = 2'000'000;  // even
  const double h = upper / steps;
  auto integrand = [&](double lambda) {
    if (lambda <= 0.0) return 0.0;
    return std::exp((static_cast<double>(S) + pr.a - 1.0) * std::log(lambda) -
                    lambda * rate);
  };
  double sum = integrand(0.0) + integrand(upper);
  for (int step = 1; step < steps; ++step)
    sum += integrand(step * h) * (step % 2 == 1 ? 4.0 : 2.0);
  const double integral = sum * h / 3.0;
  return pr.a * std::log(pr.b) - std::lgamma(pr.a) - logP + std::log(integral);
}

}  // namespace

TEST_CASE("log_block_likelihood") {
  const Priors unit{};
  SUBCASE("empty block with zero exposure is exactly zero") {
    CHECK(log_block_likelihood(0, 0.0, 0, unit) == 0.0);
  }
  SUBCASE("empty block with exposure 2") {
    CHECK(log_block_likelihood(0, 0.0, 2, unit) ==
          doctest::Approx(-std::log(3.0)).epsilon(1e-12));
  }
  SUBCASE("S=3, logP=log 6, R=1 against quadrature") {
    const double value = log_block_likelihood(3, std::log(6.0), 1, unit);
    CHECK(value == doctest::Approx(-4.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(value == doctest::Approx(quadrature_log_block(3, std::log(6.0), 1, unit))
                       .epsilon(1e-7));
  }
  SUBCASE("non-unit priors against quadrature") {
    const Priors pr{2.0, 0.5, 1.0, 1.0};
    CHECK(log_block_likelihood(5, std::log(12.0), 7, pr) ==
          doctest::Approx(quadrature_log_block(5, std::log(12.0), 7, pr)).epsilon(1e-7));
  }
  SUBCASE("finite over a wide prior-rate grid") {
    for (double b : {1e-6, 1e-3, 0.1, 1.0, 10.0}) {
      const Priors pr{1.0, b, 1.0, 1.0};
      for (std::int64_t S : {0ll, 3ll, 1000ll})
        for (std::int64_t R : {0ll, 1ll, 500ll})
          CHECK(std::isfinite(log_block_likelihood(S, 0.0, R, pr)));
    }
  }
}

TEST_CASE("log_label_prior") {
  const Priors unit{};
  SUBCASE("single element, single cluster") {
    const std::vector<std::int32_t> one{1};
    CHECK(log_label_prior(one, one, 1, 1, unit) == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("single clusters cancel for any sizes") {
    const std::vector<std::int32_t> nodes{17};
    const std::vector<std::int32_t> intervals{9};
    CHECK(log_label_prior(nodes, intervals, 17, 9, unit) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("two singleton node clusters") {
    // direct Dirichlet-multinomial value: Gamma(2) Gamma(2) Gamma(2) / Gamma(4) = 1/6
    const std::vector<std::int32_t> nodes{1, 1};
    const std::vector<std::int32_t> intervals{1};
    CHECK(log_label_prior(nodes, intervals, 2, 1, unit) ==
          doctest::Approx(-std::log(6.0)).epsilon(1e-12));
  }
}

TEST_CASE("icl_full") {
  const Priors unit{};
  SUBCASE("single empty cell") {
    const auto t = InteractionTensor::from_records({}, 1, 1);
    const auto p = Partition::single_cluster(1, 1);
    const SuffStats stats(t, p, unit, 1, 1);
    const auto icl = icl_full(stats, p);
    CHECK(icl.value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(icl.value == doctest::Approx(icl.block_term + icl.label_term).epsilon(1e-12));
  }
  SUBCASE("two nodes, one interval, empty tensor") {
    const auto t = InteractionTensor::from_records({}, 2, 1);
    const auto p = Partition::single_cluster(2, 1);
    const SuffStats stats(t, p, unit, 1, 1);
    CHECK(icl_full(stats, p).value == doctest::Approx(-std::log(3.0)).epsilon(1e-12));
  }
  SUBCASE("random instances match the literal reference evaluator") {
    Rng rng(31337);
    for (int rep = 0; rep < 50; ++rep) {
      const auto inst = random_instance(rng, 8, 6);
      const SuffStats stats(inst.tensor, inst.partition, inst.priors, inst.partition.K + 1,
                            inst.partition.D + 1);
      const auto icl = icl_full(stats, inst.partition);
      const double expected = reference_icl(inst.tensor, inst.partition, inst.priors);
      CHECK(icl.value ==
            doctest::Approx(expected).epsilon(1e-10).scale(std::abs(expected) + 1.0));
      CHECK(icl.value == doctest::Approx(icl.block_term + icl.label_term).epsilon(1e-12));
    }
  }
  SUBCASE("invariant under cluster relabeling") {
    Rng rng(404);
    for (int rep = 0; rep < 20; ++rep) {
      const auto inst = random_instance(rng, 8, 6);
      const SuffStats stats(inst.tensor, inst.partition, inst.priors, inst.partition.K,
                            inst.partition.D);
      const double base = icl_full(stats, inst.partition).value;

      Partition permuted = inst.partition;
      std::vector<std::int32_t> node_map(static_cast<std::size_t>(permuted.K));
      std::vector<std::int32_t> interval_map(static_cast<std::size_t>(permuted.D));
      for (std::size_t v = 0; v < node_map.size(); ++v)
        node_map[v] = static_cast<std::int32_t>(v);
      for (std::size_t v = 0; v < interval_map.size(); ++v)
        interval_map[v] = static_cast<std::int32_t>(v);
      rng.shuffle(node_map);
      rng.shuffle(interval_map);
      for (auto& c : permuted.node_labels) c = node_map[static_cast<std::size_t>(c)];
      for (auto& y : permuted.interval_labels) y = interval_map[static_cast<std::size_t>(y)];

      const SuffStats permuted_stats(inst.tensor, permuted, inst.priors, permuted.K,
                                     permuted.D);
      CHECK(icl_full(permuted_stats, permuted).value ==
            doctest::Approx(base).epsilon(1e-10).scale(std::abs(base) + 1.0));
    }
  }
}
