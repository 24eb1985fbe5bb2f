#include "tsbm/tsbm.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <string>

#include "core/partition.hpp"
#include "core/rng.hpp"
#include "core/tensor.hpp"
#include "eval/ari.hpp"
#include "greedy/fit.hpp"
#include "icl/icl.hpp"
#include "io/csv.hpp"
#include "io/json_io.hpp"
#include "simulate/planted.hpp"

struct tsbm_tensor {
  tsbm::InteractionTensor impl;
};

struct tsbm_result {
  tsbm::FitResult impl;
};

struct tsbm_dataset {
  tsbm_tensor tensor;  // aliased by tsbm_dataset_tensor
  tsbm::SampledGraph graph;
};

namespace {

thread_local std::string g_last_error;

tsbm_status fail(tsbm_status code, const char* message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
tsbm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TSBM_OK;
  } catch (const tsbm::ParseError& e) {
    g_last_error = e.what();
    return TSBM_ERROR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TSBM_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    // file-system level failures surface as runtime_errors from the io layer
    return std::strstr(e.what(), "cannot ") || std::strstr(e.what(), "write failed")
               ? TSBM_ERROR_IO
               : TSBM_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TSBM_ERROR_INTERNAL;
  }
}

tsbm_status copy_labels(const std::vector<std::int32_t>& labels, int32_t* out,
                        size_t capacity) {
  if (out == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null output buffer");
  if (capacity < labels.size())
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "output buffer too small");
  std::memcpy(out, labels.data(), labels.size() * sizeof(int32_t));
  g_last_error.clear();
  return TSBM_OK;
}

tsbm::FitConfig to_config(const tsbm_fit_options& o, tsbm::Priors& priors) {
  tsbm::FitConfig config;
  switch (o.strategy) {
    case TSBM_STRATEGY_A: config.strategy = tsbm::Strategy::A; break;
    case TSBM_STRATEGY_B: config.strategy = tsbm::Strategy::B; break;
    case TSBM_STRATEGY_C: config.strategy = tsbm::Strategy::C; break;
    default: throw std::invalid_argument("unknown strategy");
  }
  switch (o.init) {
    case TSBM_INIT_SINGLETONS: config.init = tsbm::InitMethod::singletons; break;
    case TSBM_INIT_RANDOM: config.init = tsbm::InitMethod::random; break;
    case TSBM_INIT_HIERARCHICAL: config.init = tsbm::InitMethod::hierarchical; break;
    default: throw std::invalid_argument("unknown init method");
  }
  config.k_max = static_cast<int>(o.k_max);
  config.d_max = static_cast<int>(o.d_max);
  config.restarts = o.restarts;
  config.seed = o.seed;
  config.min_improvement = o.min_improvement;
  config.jobs = o.jobs;
  config.reshuffle_each_sweep = o.reshuffle_each_sweep != 0;
  config.repeat_exchange_after_merge = o.repeat_exchange_after_merge != 0;
  priors = tsbm::Priors{o.prior_a, o.prior_b, o.prior_alpha, o.prior_gamma};
  return config;
}

tsbm_dataset* wrap_dataset(tsbm::SampledGraph graph) {
  auto* dataset = new tsbm_dataset;
  dataset->graph = std::move(graph);
  dataset->tensor.impl = dataset->graph.tensor;
  return dataset;
}

}  // namespace

extern "C" {

const char* tsbm_version(void) { return "0.1.0"; }

const char* tsbm_last_error(void) { return g_last_error.c_str(); }

uint64_t tsbm_derive_seed(uint64_t base, uint64_t index) {
  return tsbm::derive_seed(base, index);
}

tsbm_status tsbm_tensor_from_records(const int64_t* records, size_t n_records,
                                     int64_t n_nodes, int64_t n_intervals,
                                     tsbm_tensor** out) {
  if (out == nullptr || (records == nullptr && n_records > 0))
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<tsbm::EdgeRecord> rows(n_records);
    for (size_t r = 0; r < n_records; ++r)
      rows[r] = {static_cast<std::int32_t>(records[4 * r]),
                 static_cast<std::int32_t>(records[4 * r + 1]),
                 static_cast<std::int32_t>(records[4 * r + 2]), records[4 * r + 3]};
    *out = new tsbm_tensor{tsbm::InteractionTensor::from_records(
        rows, static_cast<int>(n_nodes), static_cast<int>(n_intervals))};
  });
}

tsbm_status tsbm_tensor_from_aggregated_csv(const char* path, int64_t n_nodes,
                                            int64_t n_intervals, tsbm_tensor** out) {
  if (out == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new tsbm_tensor{tsbm::read_aggregated_csv(path, static_cast<int>(n_nodes),
                                                     static_cast<int>(n_intervals))};
  });
}

tsbm_status tsbm_tensor_from_stream_csv(const char* path, double delta, double horizon,
                                        int64_t n_nodes, tsbm_tensor** out) {
  if (out == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new tsbm_tensor{
        tsbm::read_stream_csv(path, delta, horizon, static_cast<int>(n_nodes))};
  });
}

tsbm_status tsbm_tensor_write_aggregated_csv(const tsbm_tensor* tensor, const char* path) {
  if (tensor == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { tsbm::write_aggregated_csv(path, tensor->impl); });
}

tsbm_status tsbm_tensor_aggregate_intervals(const tsbm_tensor* tensor, tsbm_tensor** out) {
  if (tensor == nullptr || out == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new tsbm_tensor{tensor->impl.aggregated_over_intervals()}; });
}

int64_t tsbm_tensor_n_nodes(const tsbm_tensor* tensor) {
  return tensor ? tensor->impl.n_nodes() : 0;
}

int64_t tsbm_tensor_n_intervals(const tsbm_tensor* tensor) {
  return tensor ? tensor->impl.n_intervals() : 0;
}

int64_t tsbm_tensor_total(const tsbm_tensor* tensor) {
  return tensor ? tensor->impl.total() : 0;
}

int64_t tsbm_tensor_count(const tsbm_tensor* tensor, int64_t i, int64_t j, int64_t u) {
  if (tensor == nullptr) return 0;
  if (i < 0 || i >= tensor->impl.n_nodes() || j < 0 || j >= tensor->impl.n_nodes() ||
      u < 0 || u >= tensor->impl.n_intervals())
    return 0;
  return tensor->impl.count(static_cast<int>(i), static_cast<int>(j), static_cast<int>(u));
}

void tsbm_tensor_free(tsbm_tensor* tensor) { delete tensor; }

void tsbm_fit_options_defaults(tsbm_fit_options* options) {
  if (options == nullptr) return;
  options->strategy = TSBM_STRATEGY_A;
  options->init = TSBM_INIT_HIERARCHICAL;
  options->k_max = 0;
  options->d_max = 0;
  options->restarts = 1;
  options->seed = 0;
  options->min_improvement = 1e-10;
  options->jobs = 1;
  options->reshuffle_each_sweep = 1;
  options->repeat_exchange_after_merge = 1;
  options->prior_a = 1.0;
  options->prior_b = 1.0;
  options->prior_alpha = 1.0;
  options->prior_gamma = 1.0;
}

tsbm_status tsbm_fit(const tsbm_tensor* tensor, const tsbm_fit_options* options,
                     tsbm_result** out) {
  if (tensor == nullptr || options == nullptr || out == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    tsbm::Priors priors;
    const tsbm::FitConfig config = to_config(*options, priors);
    *out = new tsbm_result{tsbm::fit(tensor->impl, config, priors)};
  });
}

int64_t tsbm_result_k(const tsbm_result* result) {
  return result ? result->impl.partition.K : 0;
}

int64_t tsbm_result_d(const tsbm_result* result) {
  return result ? result->impl.partition.D : 0;
}

double tsbm_result_icl(const tsbm_result* result) {
  return result ? result->impl.icl.value : 0.0;
}

double tsbm_result_icl_block_term(const tsbm_result* result) {
  return result ? result->impl.icl.block_term : 0.0;
}

double tsbm_result_icl_label_term(const tsbm_result* result) {
  return result ? result->impl.icl.label_term : 0.0;
}

int tsbm_result_strategy(const tsbm_result* result) {
  if (result == nullptr) return -1;
  switch (result->impl.strategy) {
    case tsbm::Strategy::A: return TSBM_STRATEGY_A;
    case tsbm::Strategy::B: return TSBM_STRATEGY_B;
    case tsbm::Strategy::C: return TSBM_STRATEGY_C;
  }
  return -1;
}

int tsbm_result_best_restart(const tsbm_result* result) {
  return result ? result->impl.restart_index : -1;
}

int tsbm_result_n_restarts(const tsbm_result* result) {
  return result ? static_cast<int>(result->impl.restart_icls.size()) : 0;
}

double tsbm_result_restart_icl(const tsbm_result* result, int restart) {
  if (result == nullptr || restart < 0 ||
      restart >= static_cast<int>(result->impl.restart_icls.size()))
    return 0.0;
  return result->impl.restart_icls[static_cast<std::size_t>(restart)];
}

tsbm_status tsbm_result_node_labels(const tsbm_result* result, int32_t* out,
                                    size_t capacity) {
  if (result == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null result");
  return copy_labels(result->impl.partition.node_labels, out, capacity);
}

tsbm_status tsbm_result_interval_labels(const tsbm_result* result, int32_t* out,
                                        size_t capacity) {
  if (result == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null result");
  return copy_labels(result->impl.partition.interval_labels, out, capacity);
}

tsbm_status tsbm_result_write_partition_json(const tsbm_result* result, const char* path) {
  if (result == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { tsbm::write_partition_json(path, result->impl.partition); });
}

void tsbm_result_free(tsbm_result* result) { delete result; }

size_t tsbm_result_trace_length(const tsbm_result* result) {
  return result ? result->impl.trace.size() : 0;
}

tsbm_status tsbm_result_trace_entry(const tsbm_result* result, size_t index,
                                    tsbm_trace_entry* out) {
  if (result == nullptr || out == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  if (index >= result->impl.trace.size())
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "trace index out of range");
  const tsbm::TraceEntry& entry = result->impl.trace[index];
  switch (entry.move.kind) {
    case tsbm::Move::Kind::node_exchange: out->kind = TSBM_MOVE_NODE_EXCHANGE; break;
    case tsbm::Move::Kind::interval_exchange: out->kind = TSBM_MOVE_INTERVAL_EXCHANGE; break;
    case tsbm::Move::Kind::node_merge: out->kind = TSBM_MOVE_NODE_MERGE; break;
    case tsbm::Move::Kind::interval_merge: out->kind = TSBM_MOVE_INTERVAL_MERGE; break;
  }
  out->element = entry.move.element;
  out->src = entry.move.src;
  out->dst = entry.move.dst;
  out->delta = entry.delta;
  out->icl_after = entry.icl_after;
  g_last_error.clear();
  return TSBM_OK;
}

tsbm_status tsbm_icl(const tsbm_tensor* tensor, const int32_t* node_labels,
                     const int32_t* interval_labels, double prior_a, double prior_b,
                     double prior_alpha, double prior_gamma, double out_terms[3]) {
  if (tensor == nullptr || node_labels == nullptr || interval_labels == nullptr ||
      out_terms == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    tsbm::Partition p;
    p.node_labels.assign(node_labels,
                         node_labels + static_cast<std::size_t>(tensor->impl.n_nodes()));
    p.interval_labels.assign(
        interval_labels,
        interval_labels + static_cast<std::size_t>(tensor->impl.n_intervals()));
    p.K = p.node_labels.empty()
              ? 0
              : 1 + *std::max_element(p.node_labels.begin(), p.node_labels.end());
    p.D = p.interval_labels.empty()
              ? 0
              : 1 + *std::max_element(p.interval_labels.begin(), p.interval_labels.end());
    const tsbm::Priors priors{prior_a, prior_b, prior_alpha, prior_gamma};
    const tsbm::SuffStats stats(tensor->impl, p, priors, std::max(p.K, 1),
                                std::max(p.D, 1));
    const tsbm::IclValue value = tsbm::icl_full(stats, p);
    out_terms[0] = value.value;
    out_terms[1] = value.block_term;
    out_terms[2] = value.label_term;
  });
}

tsbm_status tsbm_simulate_scenario1(double psi, double gamma_contrast, int64_t n_nodes,
                                    int64_t n_intervals, uint64_t seed,
                                    tsbm_dataset** out) {
  if (out == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap_dataset(tsbm::scenario1(psi, gamma_contrast, static_cast<int>(n_nodes),
                                        static_cast<int>(n_intervals), seed));
  });
}

tsbm_status tsbm_simulate_scenario2(int64_t n_nodes, int64_t n_intervals, uint64_t seed,
                                    int fixed_balanced_y, tsbm_dataset** out) {
  if (out == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap_dataset(tsbm::scenario2(static_cast<int>(n_nodes),
                                        static_cast<int>(n_intervals), seed,
                                        fixed_balanced_y != 0));
  });
}

tsbm_status tsbm_simulate_model_json(const char* path, uint64_t seed, tsbm_dataset** out) {
  if (out == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap_dataset(tsbm::sample_planted(tsbm::read_model_json(path), seed));
  });
}

const tsbm_tensor* tsbm_dataset_tensor(const tsbm_dataset* dataset) {
  return dataset ? &dataset->tensor : nullptr;
}

tsbm_status tsbm_dataset_node_labels(const tsbm_dataset* dataset, int32_t* out,
                                     size_t capacity) {
  if (dataset == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null dataset");
  return copy_labels(dataset->graph.node_labels, out, capacity);
}

tsbm_status tsbm_dataset_interval_labels(const tsbm_dataset* dataset, int32_t* out,
                                         size_t capacity) {
  if (dataset == nullptr) return fail(TSBM_ERROR_INVALID_ARGUMENT, "null dataset");
  return copy_labels(dataset->graph.interval_labels, out, capacity);
}

tsbm_status tsbm_dataset_write_truth_json(const tsbm_dataset* dataset, const char* path) {
  if (dataset == nullptr || path == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { tsbm::write_truth_json(path, dataset->graph); });
}

void tsbm_dataset_free(tsbm_dataset* dataset) { delete dataset; }

tsbm_status tsbm_ari(const int32_t* x, const int32_t* y, size_t n, double* out) {
  if (x == nullptr || y == nullptr || out == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = tsbm::ari(std::span<const std::int32_t>(x, n),
                     std::span<const std::int32_t>(y, n));
  });
}

tsbm_status tsbm_confusion(const int32_t* x, const int32_t* y, size_t n, int64_t* table,
                           size_t capacity, size_t* n_rows, size_t* n_cols) {
  if (x == nullptr || y == nullptr || n_rows == nullptr || n_cols == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const tsbm::Contingency c = tsbm::confusion(std::span<const std::int32_t>(x, n),
                                                std::span<const std::int32_t>(y, n));
    *n_rows = static_cast<size_t>(c.n_rows);
    *n_cols = static_cast<size_t>(c.n_cols);
    if (table != nullptr) {
      if (capacity < c.table.size()) throw std::invalid_argument("table buffer too small");
      std::memcpy(table, c.table.data(), c.table.size() * sizeof(int64_t));
    }
  });
}

tsbm_status tsbm_read_labels_json(const char* path, const char* key, int32_t* out,
                                  size_t capacity, size_t* length) {
  if (path == nullptr || key == nullptr || length == nullptr)
    return fail(TSBM_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const tsbm::Partition p = tsbm::read_partition_json(path);
    const std::string which = key;
    const std::vector<std::int32_t>* labels = nullptr;
    if (which == "node_labels")
      labels = &p.node_labels;
    else if (which == "interval_labels")
      labels = &p.interval_labels;
    else
      throw std::invalid_argument("key must be node_labels or interval_labels");
    *length = labels->size();
    if (out != nullptr) {
      if (capacity < labels->size()) throw std::invalid_argument("buffer too small");
      std::memcpy(out, labels->data(), labels->size() * sizeof(int32_t));
    }
  });
}

}  // extern "C"
