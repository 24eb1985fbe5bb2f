#include <doctest.h>

#include <cmath>
#include <set>

#include "greedy/fit.hpp"
#include "greedy/linkage.hpp"
#include "simulate/planted.hpp"
#include "support/reference.hpp"

using namespace tsbm;
using tsbm::testing::random_instance;

namespace {

// exhaustive scan: no single exchange or merge may improve the final state
void check_local_optimum(const InteractionTensor& tensor, const Partition& p,
                         const Priors& priors, double tolerance = 1e-8) {
  const SuffStats stats(tensor, p, priors, std::max(p.K, 1), std::max(p.D, 1));
  for (int node = 0; node < p.n_nodes(); ++node) {
    const int src = p.node_labels[static_cast<std::size_t>(node)];
    for (int dst = 0; dst < p.K; ++dst) {
      if (dst == src) continue;
      const double delta = stats.node_cluster_size(src) == 1
                               ? delta_merge_node(stats, p, src, dst)
                               : delta_exchange_node(stats, p, node, src, dst);
      CHECK(delta <= tolerance);
    }
  }
  for (int u = 0; u < p.n_intervals(); ++u) {
    const int src = p.interval_labels[static_cast<std::size_t>(u)];
    for (int dst = 0; dst < p.D; ++dst) {
      if (dst == src) continue;
      const double delta = stats.interval_cluster_size(src) == 1
                               ? delta_merge_interval(stats, p, src, dst)
                               : delta_exchange_interval(stats, p, u, src, dst);
      CHECK(delta <= tolerance);
    }
  }
  for (int a = 0; a < p.K; ++a)
    for (int b = a + 1; b < p.K; ++b) CHECK(delta_merge_node(stats, p, a, b) <= tolerance);
  for (int a = 0; a < p.D; ++a)
    for (int b = a + 1; b < p.D; ++b)
      CHECK(delta_merge_interval(stats, p, a, b) <= tolerance);
}

void check_trace(const InteractionTensor& tensor, const FitResult& result,
                 const Priors& priors, const FitConfig& config) {
  double expected_icl = -std::numeric_limits<double>::infinity();
  for (const TraceEntry& entry : result.trace) {
    CHECK(entry.delta > config.min_improvement);
    CHECK(entry.icl_after > expected_icl);
    expected_icl = entry.icl_after;
  }
  if (!result.trace.empty()) {
    const double final_trace = result.trace.back().icl_after;
    CHECK(std::abs(final_trace - result.icl.value) <=
          1e-6 * std::max(1.0, std::abs(result.icl.value)));
  }
  // the recomputed value itself is consistent with its parts and the state
  const SuffStats stats(tensor, result.partition, priors,
                        std::max(result.partition.K, 1), std::max(result.partition.D, 1));
  CHECK(std::abs(icl_full(stats, result.partition).value - result.icl.value) <= 1e-9);
}

}  // namespace

TEST_CASE("init_partition") {
  const auto graph = scenario1(2.3, 1.2, 18, 12, 5);
  FitConfig config;

  SUBCASE("singletons puts everyone alone when limits allow") {
    config.init = InitMethod::singletons;
    config.k_max = 18;
    config.d_max = 12;
    Rng rng(1);
    const auto p = init_partition(graph.tensor, config, rng);
    CHECK(p.K == 18);
    CHECK(p.D == 12);
    for (int i = 0; i < 18; ++i) CHECK(p.node_labels[static_cast<std::size_t>(i)] == i);
  }
  SUBCASE("singletons wraps modulo the limits") {
    config.init = InitMethod::singletons;
    config.k_max = 5;
    config.d_max = 4;
    Rng rng(1);
    const auto p = init_partition(graph.tensor, config, rng);
    CHECK(p.K == 5);
    CHECK(p.D == 4);
    CHECK(p.node_labels[7] == 2);
    p.validate();
  }
  SUBCASE("random is reproducible and never leaves empty clusters") {
    config.init = InitMethod::random;
    config.k_max = 9;
    config.d_max = 6;
    Rng rng_a(42), rng_b(42);
    const auto pa = init_partition(graph.tensor, config, rng_a);
    const auto pb = init_partition(graph.tensor, config, rng_b);
    CHECK(pa == pb);
    pa.validate();
    CHECK(pa.K <= 9);
    CHECK(pa.D <= 6);
  }
  SUBCASE("hierarchical cuts at the limits") {
    config.init = InitMethod::hierarchical;
    config.k_max = 9;
    config.d_max = 6;
    Rng rng(1);
    const auto p = init_partition(graph.tensor, config, rng);
    p.validate();
    CHECK(p.K == 9);
    CHECK(p.D == 6);
  }
  SUBCASE("limits above the dimensions are rejected") {
    config.k_max = 19;
    Rng rng(1);
    CHECK_THROWS_AS(init_partition(graph.tensor, config, rng), std::invalid_argument);
  }
}

TEST_CASE("average linkage separates well-spread points") {
  std::vector<std::vector<double>> points = {{0.0, 0.0}, {0.1, 0.0}, {0.0, 0.1},
                                             {5.0, 5.0}, {5.1, 5.0}, {5.0, 5.1},
                                             {9.0, 0.0}, {9.1, 0.0}};
  const auto labels = average_linkage_labels(points, 3);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[1] == labels[2]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[4] == labels[5]);
  CHECK(labels[6] == labels[7]);
  const std::set<std::int32_t> distinct(labels.begin(), labels.end());
  CHECK(distinct.size() == 3);
}

TEST_CASE("ge_pass accepts nothing at a fixed point") {
  const auto graph = scenario2(16, 12, 31, true);
  Partition p{graph.node_labels, graph.interval_labels, 2, 2};
  FitState state(graph.tensor, p, Priors{}, 8, 6, Rng(7), 1e-10, true);
  CHECK(state.ge_pass(MoveTarget::nodes) == 0);
  CHECK(state.ge_pass(MoveTarget::intervals) == 0);
  CHECK(state.ge_pass(MoveTarget::mixed) == 0);
  CHECK(state.partition() == p);
}

TEST_CASE("gm_pass has nothing to merge at K = D = 1") {
  const auto graph = scenario1(2.2, 1.1, 10, 8, 3);
  FitState state(graph.tensor, Partition::single_cluster(10, 8), Priors{}, 5, 4, Rng(7),
                 1e-10, true);
  CHECK(state.gm_pass(MoveTarget::mixed) == 0);
  CHECK(state.partition().K == 1);
  CHECK(state.partition().D == 1);
}

TEST_CASE("gm_pass repairs an oversegmented planted clustering") {
  // split each true cluster of a strong two-community instance in half
  PlantedModel model;
  model.n_nodes = 24;
  model.n_intervals = 10;
  model.node_weights = {0.5, 0.5};
  model.time_weights = {1.0};
  model.rates = {6.0, 0.5, 0.5, 6.0};
  const auto graph = sample_planted(model, 11);

  Partition p;
  p.node_labels.resize(24);
  int seen[2] = {0, 0};
  for (int i = 0; i < 24; ++i) {
    const int truth = graph.node_labels[static_cast<std::size_t>(i)];
    p.node_labels[static_cast<std::size_t>(i)] =
        static_cast<std::int32_t>(2 * truth + (seen[truth]++ % 2));
  }
  p.K = compact_labels(p.node_labels);
  p.interval_labels.assign(10, 0);
  p.D = 1;

  FitState state(graph.tensor, p, Priors{}, 8, 4, Rng(5), 1e-10, true);
  const int merges = state.gm_pass(MoveTarget::nodes);
  CHECK(merges >= 2);
  CHECK(state.partition().K == 2);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      const bool together = state.partition().node_labels[static_cast<std::size_t>(i)] ==
                            state.partition().node_labels[static_cast<std::size_t>(j)];
      const bool truth_together =
          graph.node_labels[static_cast<std::size_t>(i)] ==
          graph.node_labels[static_cast<std::size_t>(j)];
      CHECK(together == truth_together);
    }
  // each committed merge decremented K by exactly one
  CHECK(state.trace().size() == static_cast<std::size_t>(merges));
}

TEST_CASE("run_strategy is deterministic and monotone") {
  const auto graph = scenario1(2.6, 1.3, 15, 10, 17);
  const Priors priors{};
  for (const Strategy strategy : {Strategy::A, Strategy::B, Strategy::C}) {
    FitConfig config;
    config.strategy = strategy;
    config.init = InitMethod::random;
    const auto first = run_strategy(graph.tensor, config, priors, 321);
    const auto second = run_strategy(graph.tensor, config, priors, 321);
    CHECK(first.partition == second.partition);
    CHECK(first.icl.value == second.icl.value);
    CHECK(first.trace.size() == second.trace.size());
    check_trace(graph.tensor, first, priors, config);
    check_local_optimum(graph.tensor, first.partition, priors);
  }
}

TEST_CASE("fits over random small instances end at local optima") {
  Rng rng(606);
  const Priors priors{};
  int done = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = random_instance(rng, 15, 10);
    FitConfig config;
    config.strategy = rep % 2 == 0 ? Strategy::A : Strategy::C;
    config.init = rep % 3 == 0 ? InitMethod::singletons : InitMethod::hierarchical;
    config.seed = 1000 + static_cast<std::uint64_t>(rep);
    const auto result = fit(inst.tensor, config, priors);
    check_trace(inst.tensor, result, priors, config);
    check_local_optimum(inst.tensor, result.partition, priors);
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("fit with restarts") {
  const auto graph = scenario1(2.8, 1.4, 20, 14, 23);
  const Priors priors{};

  FitConfig config;
  config.init = InitMethod::random;
  config.seed = 5;

  SUBCASE("one restart reduces to run_strategy") {
    const auto direct = run_strategy(graph.tensor, config, priors, derive_seed(5, 0), 0);
    const auto fitted = fit(graph.tensor, config, priors);
    CHECK(fitted.partition == direct.partition);
    CHECK(fitted.icl.value == direct.icl.value);
    CHECK(fitted.restart_icls.size() == 1);
  }
  SUBCASE("best of ten dominates every single run and ignores scheduling") {
    config.restarts = 10;
    const auto serial = fit(graph.tensor, config, priors);
    CHECK(serial.restart_icls.size() == 10);
    for (int r = 0; r < 10; ++r) {
      const auto single = run_strategy(graph.tensor, config, priors,
                                       derive_seed(5, static_cast<std::uint64_t>(r)), r);
      CHECK(serial.icl.value >= single.icl.value);
      CHECK(serial.restart_icls[static_cast<std::size_t>(r)] ==
            doctest::Approx(single.icl.value).epsilon(1e-12));
    }
    config.jobs = 4;
    const auto threaded = fit(graph.tensor, config, priors);
    CHECK(threaded.partition == serial.partition);
    CHECK(threaded.restart_icls == serial.restart_icls);
    CHECK(threaded.restart_index == serial.restart_index);
  }
}

TEST_CASE("interval phase collapses time clusters when there is no time structure") {
  const auto graph = scenario1(2.0, 1.0, 30, 24, 9);  // contrast 1: no time pattern
  FitConfig config;
  config.init = InitMethod::random;
  config.seed = 77;
  config.strategy = Strategy::A;
  config.restarts = 3;
  const auto result = fit(graph.tensor, config, {});
  CHECK(result.partition.D == 1);
}
