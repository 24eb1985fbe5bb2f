/* tsbm - temporal stochastic block model clustering.
 *
 * C interface of the shared library. All functions returning tsbm_status
 * report failure through the code and leave a human-readable message in
 * tsbm_last_error() (thread-local). Objects are opaque handles; every
 * *_free accepts NULL.
 */
#ifndef TSBM_H
#define TSBM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsbm_status {
  TSBM_OK = 0,
  TSBM_ERROR_INVALID_ARGUMENT = 1,
  TSBM_ERROR_PARSE = 2,
  TSBM_ERROR_IO = 3,
  TSBM_ERROR_INTERNAL = 4
} tsbm_status;

const char* tsbm_version(void);
/* message of the most recent failure on this thread; empty if none */
const char* tsbm_last_error(void);
/* stream seed for restart/replicate `index`, decorrelated from `base` */
uint64_t tsbm_derive_seed(uint64_t base, uint64_t index);

/* ---- interaction tensors ------------------------------------------------ */

/* directed counts over equal-width intervals; immutable once built */
typedef struct tsbm_tensor tsbm_tensor;

/* records = n_records rows of (src, dst, interval, count); duplicates are
 * summed. n_nodes / n_intervals of 0 infer the dimension as max index + 1. */
tsbm_status tsbm_tensor_from_records(const int64_t* records, size_t n_records,
                                     int64_t n_nodes, int64_t n_intervals,
                                     tsbm_tensor** out);
/* header `src,dst,interval,count` */
tsbm_status tsbm_tensor_from_aggregated_csv(const char* path, int64_t n_nodes,
                                            int64_t n_intervals, tsbm_tensor** out);
/* header `t,src,dst`; bins (0, horizon] into horizon/delta intervals */
tsbm_status tsbm_tensor_from_stream_csv(const char* path, double delta, double horizon,
                                        int64_t n_nodes, tsbm_tensor** out);
tsbm_status tsbm_tensor_write_aggregated_csv(const tsbm_tensor* tensor, const char* path);
/* counts summed over intervals: the U = 1 static view */
tsbm_status tsbm_tensor_aggregate_intervals(const tsbm_tensor* tensor, tsbm_tensor** out);

int64_t tsbm_tensor_n_nodes(const tsbm_tensor* tensor);
int64_t tsbm_tensor_n_intervals(const tsbm_tensor* tensor);
int64_t tsbm_tensor_total(const tsbm_tensor* tensor);
int64_t tsbm_tensor_count(const tsbm_tensor* tensor, int64_t i, int64_t j, int64_t u);
void tsbm_tensor_free(tsbm_tensor* tensor);

/* ---- fitting ------------------------------------------------------------ */

#define TSBM_STRATEGY_A 0 /* intervals then nodes */
#define TSBM_STRATEGY_B 1 /* nodes then intervals */
#define TSBM_STRATEGY_C 2 /* mixed passes */

#define TSBM_INIT_SINGLETONS 0
#define TSBM_INIT_RANDOM 1
#define TSBM_INIT_HIERARCHICAL 2

typedef struct tsbm_fit_options {
  int strategy;            /* TSBM_STRATEGY_* */
  int init;                /* TSBM_INIT_* */
  int64_t k_max;           /* 0 = ceil(N / 2) */
  int64_t d_max;           /* 0 = ceil(U / 2) */
  int restarts;            /* >= 1, derived seeds per restart */
  uint64_t seed;
  double min_improvement;  /* accept moves only above this ICL gain */
  int jobs;                /* parallel restarts; result is schedule-independent */
  int reshuffle_each_sweep;
  int repeat_exchange_after_merge;
  double prior_a, prior_b; /* Gamma shape / rate on block intensities */
  double prior_alpha;      /* Dirichlet concentration, node clusters */
  double prior_gamma;      /* Dirichlet concentration, interval clusters */
} tsbm_fit_options;

void tsbm_fit_options_defaults(tsbm_fit_options* options);

typedef struct tsbm_result tsbm_result;

tsbm_status tsbm_fit(const tsbm_tensor* tensor, const tsbm_fit_options* options,
                     tsbm_result** out);

int64_t tsbm_result_k(const tsbm_result* result);
int64_t tsbm_result_d(const tsbm_result* result);
double tsbm_result_icl(const tsbm_result* result);
double tsbm_result_icl_block_term(const tsbm_result* result);
double tsbm_result_icl_label_term(const tsbm_result* result);
int tsbm_result_strategy(const tsbm_result* result);
int tsbm_result_best_restart(const tsbm_result* result);
int tsbm_result_n_restarts(const tsbm_result* result);
double tsbm_result_restart_icl(const tsbm_result* result, int restart);
/* capacity must be >= N (resp. U) */
tsbm_status tsbm_result_node_labels(const tsbm_result* result, int32_t* out,
                                    size_t capacity);
tsbm_status tsbm_result_interval_labels(const tsbm_result* result, int32_t* out,
                                        size_t capacity);
tsbm_status tsbm_result_write_partition_json(const tsbm_result* result, const char* path);
void tsbm_result_free(tsbm_result* result);

/* committed moves, in order; icl_after values are strictly increasing */
#define TSBM_MOVE_NODE_EXCHANGE 0
#define TSBM_MOVE_INTERVAL_EXCHANGE 1
#define TSBM_MOVE_NODE_MERGE 2
#define TSBM_MOVE_INTERVAL_MERGE 3

typedef struct tsbm_trace_entry {
  int kind;        /* TSBM_MOVE_* */
  int64_t element; /* node or interval id; -1 for merges */
  int64_t src;
  int64_t dst;
  double delta;
  double icl_after;
} tsbm_trace_entry;

size_t tsbm_result_trace_length(const tsbm_result* result);
tsbm_status tsbm_result_trace_entry(const tsbm_result* result, size_t index,
                                    tsbm_trace_entry* out);

/* exact ICL of a given labeling (labels contiguous from 0) */
tsbm_status tsbm_icl(const tsbm_tensor* tensor, const int32_t* node_labels,
                     const int32_t* interval_labels, double prior_a, double prior_b,
                     double prior_alpha, double prior_gamma, double out_terms[3]);

/* ---- synthetic data ----------------------------------------------------- */

/* a sampled graph together with its ground-truth labels and model */
typedef struct tsbm_dataset tsbm_dataset;

tsbm_status tsbm_simulate_scenario1(double psi, double gamma_contrast, int64_t n_nodes,
                                    int64_t n_intervals, uint64_t seed,
                                    tsbm_dataset** out);
tsbm_status tsbm_simulate_scenario2(int64_t n_nodes, int64_t n_intervals, uint64_t seed,
                                    int fixed_balanced_y, tsbm_dataset** out);
/* model JSON: n_nodes, n_intervals, node_weights, time_weights, rates[K][K][D] */
tsbm_status tsbm_simulate_model_json(const char* path, uint64_t seed, tsbm_dataset** out);

const tsbm_tensor* tsbm_dataset_tensor(const tsbm_dataset* dataset);
tsbm_status tsbm_dataset_node_labels(const tsbm_dataset* dataset, int32_t* out,
                                     size_t capacity);
tsbm_status tsbm_dataset_interval_labels(const tsbm_dataset* dataset, int32_t* out,
                                         size_t capacity);
/* truth JSON: labels with effective K/D plus the generating model */
tsbm_status tsbm_dataset_write_truth_json(const tsbm_dataset* dataset, const char* path);
void tsbm_dataset_free(tsbm_dataset* dataset);

/* ---- evaluation --------------------------------------------------------- */

/* Hubert-Arabie adjusted Rand index; n >= 2 */
tsbm_status tsbm_ari(const int32_t* x, const int32_t* y, size_t n, double* out);
/* contingency table; call with table = NULL to query n_rows / n_cols,
 * then with capacity >= n_rows * n_cols */
tsbm_status tsbm_confusion(const int32_t* x, const int32_t* y, size_t n, int64_t* table,
                           size_t capacity, size_t* n_rows, size_t* n_cols);
/* reads "node_labels" or "interval_labels" from a partition/truth JSON;
 * out = NULL queries the length */
tsbm_status tsbm_read_labels_json(const char* path, const char* key, int32_t* out,
                                  size_t capacity, size_t* length);

#ifdef __cplusplus
}
#endif

#endif /* TSBM_H */
