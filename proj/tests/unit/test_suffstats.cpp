#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/logutil.hpp"
#include "core/rng.hpp"
#include "core/suffstats.hpp"
#include "support/reference.hpp"

using namespace tsbm;
using tsbm::testing::random_instance;

namespace {

// stats must equal a scratch rebuild: integer fields exactly, log-factorial
// sums to 1e-10 absolute
void check_matches_rebuild(const SuffStats& stats, const InteractionTensor& tensor,
                           const Partition& p) {
  const SuffStats fresh(tensor, p, stats.priors(), stats.k_max(), stats.d_max());
  for (int k = 0; k < stats.k_max(); ++k)
    for (int g = 0; g < stats.k_max(); ++g) {
      for (int d = 0; d < stats.d_max(); ++d) {
        CAPTURE(k);
        CAPTURE(g);
        CAPTURE(d);
        CHECK(stats.S(k, g, d) == fresh.S(k, g, d));
        CHECK(stats.R(k, g, d) == fresh.R(k, g, d));
        CHECK(std::abs(stats.logP(k, g, d) - fresh.logP(k, g, d)) <= 1e-10);
        CHECK(std::abs(stats.logL(k, g, d) - fresh.logL(k, g, d)) <= 1e-8);
      }
      for (int u = 0; u < tensor.n_intervals(); ++u) {
        CHECK(stats.S_time(k, g, u) == fresh.S_time(k, g, u));
        CHECK(std::abs(stats.logP_time(k, g, u) - fresh.logP_time(k, g, u)) <= 1e-10);
      }
    }
  for (int i = 0; i < tensor.n_nodes(); ++i)
    for (int g = 0; g < stats.k_max(); ++g)
      for (int d = 0; d < stats.d_max(); ++d) {
        CHECK(stats.S_out(i, g, d) == fresh.S_out(i, g, d));
        CHECK(stats.S_in(i, g, d) == fresh.S_in(i, g, d));
        CHECK(std::abs(stats.logP_out(i, g, d) - fresh.logP_out(i, g, d)) <= 1e-10);
        CHECK(std::abs(stats.logP_in(i, g, d) - fresh.logP_in(i, g, d)) <= 1e-10);
      }
  for (int k = 0; k < stats.k_max(); ++k)
    CHECK(stats.node_cluster_size(k) == fresh.node_cluster_size(k));
  for (int d = 0; d < stats.d_max(); ++d)
    CHECK(stats.interval_cluster_size(d) == fresh.interval_cluster_size(d));
}

}  // namespace

TEST_CASE("suffstats build") {
  SUBCASE("all-zero tensor, single clusters") {
    const auto t = InteractionTensor::from_records({}, 4, 3);
    const auto p = Partition::single_cluster(4, 3);
    const SuffStats stats(t, p, Priors{}, 2, 2);
    CHECK(stats.S(0, 0, 0) == 0);
    CHECK(stats.logP(0, 0, 0) == 0.0);
    CHECK(stats.R(0, 0, 0) == 4 * 3 * 3);
  }
  SUBCASE("two nodes, singleton clusters") {
    const std::vector<EdgeRecord> records{{0, 1, 0, 3}};
    const auto t = InteractionTensor::from_records(records, 2, 1);
    const Partition p{{0, 1}, {0}, 2, 1};
    const SuffStats stats(t, p, Priors{}, 2, 1);
    CHECK(stats.S(0, 1, 0) == 3);
    CHECK(stats.S(1, 0, 0) == 0);
    CHECK(stats.logP(0, 1, 0) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    CHECK(stats.R(0, 1, 0) == 1);
    CHECK(stats.R(0, 0, 0) == 0);
  }
  SUBCASE("block sums add up to the tensor total") {
    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
      const auto inst = random_instance(rng);
      const SuffStats stats(inst.tensor, inst.partition, inst.priors,
                            inst.partition.K + 2, inst.partition.D + 2);
      std::int64_t sum = 0;
      for (int k = 0; k < inst.partition.K; ++k)
        for (int g = 0; g < inst.partition.K; ++g)
          for (int d = 0; d < inst.partition.D; ++d) sum += stats.S(k, g, d);
      CHECK(sum == inst.tensor.total());

      // marginal consistency: per-interval slices refold into blocks
      for (int k = 0; k < inst.partition.K; ++k)
        for (int g = 0; g < inst.partition.K; ++g)
          for (int d = 0; d < inst.partition.D; ++d) {
            std::int64_t refolded = 0;
            for (int u = 0; u < inst.tensor.n_intervals(); ++u)
              if (inst.partition.interval_labels[static_cast<std::size_t>(u)] == d)
                refolded += stats.S_time(k, g, u);
            CHECK(refolded == stats.S(k, g, d));
          }
    }
  }
  SUBCASE("exposure matches the closed form for random partitions") {
    Rng rng(1234);
    for (int rep = 0; rep < 30; ++rep) {
      const auto inst = random_instance(rng);
      const SuffStats stats(inst.tensor, inst.partition, inst.priors, inst.partition.K,
                            inst.partition.D);
      for (int k = 0; k < inst.partition.K; ++k)
        for (int g = 0; g < inst.partition.K; ++g)
          for (int d = 0; d < inst.partition.D; ++d) {
            const std::int64_t ak = stats.node_cluster_size(k);
            const std::int64_t ag = stats.node_cluster_size(g);
            const std::int64_t cd = stats.interval_cluster_size(d);
            const std::int64_t expected = (k == g ? ak * (ak - 1) : ak * ag) * cd;
            CHECK(stats.R(k, g, d) == expected);
          }
    }
  }
  SUBCASE("k_max below the live count is rejected") {
    const auto t = InteractionTensor::from_records({}, 4, 3);
    const Partition p{{0, 1, 0, 1}, {0, 0, 0}, 2, 1};
    CHECK_THROWS_AS(SuffStats(t, p, Priors{}, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("interval move updates the touched slices as documented") {
  const std::vector<EdgeRecord> records{{0, 1, 0, 2}, {0, 1, 1, 5}, {1, 2, 1, 1},
                                        {2, 0, 2, 4}};
  const auto t = InteractionTensor::from_records(records, 3, 3);
  Partition p{{0, 0, 1}, {0, 0, 1}, 2, 2};
  SuffStats stats(t, p, Priors{}, 3, 3);

  const std::int64_t s_before_src = stats.S(0, 0, 0);
  const std::int64_t s_before_dst = stats.S(0, 0, 1);
  const std::int64_t slice = stats.S_time(0, 0, 1);
  const std::int64_t pairs00 = 2 * 1;  // |A_0|(|A_0|-1)
  const std::int64_t r_before_src = stats.R(0, 0, 0);
  const std::int64_t r_before_dst = stats.R(0, 0, 1);

  stats.move_interval(t, p, 1, 1);  // interval 1: cluster 0 -> 1

  CHECK(stats.S(0, 0, 0) == s_before_src - slice);
  CHECK(stats.S(0, 0, 1) == s_before_dst + slice);
  CHECK(stats.R(0, 0, 0) == r_before_src - pairs00);
  CHECK(stats.R(0, 0, 1) == r_before_dst + pairs00);
  CHECK(p.interval_labels == std::vector<std::int32_t>{0, 1, 1});
  check_matches_rebuild(stats, t, p);
}

TEST_CASE("merging two singleton interval clusters decrements D") {
  const auto t = InteractionTensor::from_records(std::vector<EdgeRecord>{{0, 1, 0, 1}}, 2, 2);
  Partition p{{0, 0}, {0, 1}, 1, 2};
  SuffStats stats(t, p, Priors{}, 1, 2);
  stats.merge_interval_clusters(t, p, 1, 0);
  CHECK(p.D == 1);
  CHECK(stats.interval_cluster_size(0) == 2);
  check_matches_rebuild(stats, t, p);
}

TEST_CASE("random move sequences equal a scratch rebuild") {
  Rng rng(5150);
  for (int rep = 0; rep < 60; ++rep) {
    auto inst = random_instance(rng);
    Partition p = inst.partition;
    SuffStats stats(inst.tensor, p, inst.priors, p.n_nodes(), p.n_intervals());

    const int moves = 10 + static_cast<int>(rng.below(30));
    for (int mv = 0; mv < moves; ++mv) {
      switch (rng.below(4)) {
        case 0: {  // node exchange (may empty its source)
          if (p.K < 2) break;
          const auto node = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n_nodes())));
          const int src = p.node_labels[static_cast<std::size_t>(node)];
          auto dst = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.K)));
          if (dst == src) dst = (dst + 1) % p.K;
          stats.move_node(inst.tensor, p, node, dst);
          break;
        }
        case 1: {  // interval exchange
          if (p.D < 2) break;
          const auto u =
              static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n_intervals())));
          const int src = p.interval_labels[static_cast<std::size_t>(u)];
          auto dst = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.D)));
          if (dst == src) dst = (dst + 1) % p.D;
          stats.move_interval(inst.tensor, p, u, dst);
          break;
        }
        case 2: {  // node merge
          if (p.K < 2) break;
          const auto a = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.K)));
          auto b = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.K)));
          if (b == a) b = (b + 1) % p.K;
          stats.merge_node_clusters(inst.tensor, p, a, b);
          break;
        }
        default: {  // interval merge
          if (p.D < 2) break;
          const auto a = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.D)));
          auto b = static_cast<int>(rng.below(static_cast<std::uint64_t>(p.D)));
          if (b == a) b = (b + 1) % p.D;
          stats.merge_interval_clusters(inst.tensor, p, a, b);
          break;
        }
      }
      p.validate();
    }
    check_matches_rebuild(stats, inst.tensor, p);
  }
}

TEST_CASE("apply_move validates its arguments") {
  const auto t = InteractionTensor::from_records(std::vector<EdgeRecord>{{0, 1, 0, 1}}, 3, 2);
  Partition p{{0, 1, 0}, {0, 1}, 2, 2};
  SuffStats stats(t, p, Priors{}, 2, 2);
  CHECK_THROWS_AS(apply_move(stats, p, t, {Move::Kind::node_exchange, 0, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(stats, p, t, {Move::Kind::node_exchange, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(stats, p, t, {Move::Kind::node_exchange, 0, 0, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(stats, p, t, {Move::Kind::interval_merge, -1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_move(stats, p, t, {Move::Kind::node_merge, -1, 2, 0}),
                  std::invalid_argument);
}
