#include <cstdio>
#include <vector>

#include "commands.hpp"

namespace cli {

namespace {

std::vector<std::int32_t> read_labels(const std::string& path, const char* key) {
  size_t length = 0;
  check(tsbm_read_labels_json(path.c_str(), key, nullptr, 0, &length),
        "read " + path);
  std::vector<std::int32_t> labels(length);
  check(tsbm_read_labels_json(path.c_str(), key, labels.data(), labels.size(), &length),
        "read " + path);
  return labels;
}

void print_confusion(const char* name, const std::vector<std::int32_t>& x,
                     const std::vector<std::int32_t>& y) {
  size_t n_rows = 0, n_cols = 0;
  check(tsbm_confusion(x.data(), y.data(), x.size(), nullptr, 0, &n_rows, &n_cols),
        "confusion");
  std::vector<std::int64_t> table(n_rows * n_cols);
  check(tsbm_confusion(x.data(), y.data(), x.size(), table.data(), table.size(), &n_rows,
                       &n_cols),
        "confusion");
  std::printf("%s %zu %zu\n", name, n_rows, n_cols);
  for (size_t r = 0; r < n_rows; ++r) {
    for (size_t c = 0; c < n_cols; ++c)
      std::printf("%s%lld", c == 0 ? "" : " ",
                  static_cast<long long>(table[r * n_cols + c]));
    std::printf("\n");
  }
}

}  // namespace

int EvalCommand::run() const {
  const auto pred_nodes = read_labels(pred, "node_labels");
  const auto pred_intervals = read_labels(pred, "interval_labels");
  const auto truth_nodes = read_labels(truth, "node_labels");
  const auto truth_intervals = read_labels(truth, "interval_labels");

  if (pred_nodes.size() != truth_nodes.size())
    throw std::runtime_error("node label vectors differ in length");
  if (pred_intervals.size() != truth_intervals.size())
    throw std::runtime_error("interval label vectors differ in length");

  std::printf("ari_nodes %s\n", fmt(ari_of(pred_nodes, truth_nodes)).c_str());
  std::printf("ari_intervals %s\n", fmt(ari_of(pred_intervals, truth_intervals)).c_str());
  print_confusion("confusion_nodes", pred_nodes, truth_nodes);
  print_confusion("confusion_intervals", pred_intervals, truth_intervals);
  return 0;
}

}  // namespace cli
