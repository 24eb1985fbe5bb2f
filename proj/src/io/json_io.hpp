#pragma once

#include <string>

#include "core/partition.hpp"
#include "simulate/planted.hpp"

namespace tsbm {

// `{"node_labels":[...],"interval_labels":[...],"K":..,"D":..}`
void write_partition_json(const std::string& path, const Partition& partition);
// Tolerates extra keys, so ground-truth files read back as partitions too.
Partition read_partition_json(const std::string& path);

// Partition keys plus a "model" object with weights and rates.
void write_truth_json(const std::string& path, const SampledGraph& graph);

PlantedModel read_model_json(const std::string& path);
void write_model_json(const std::string& path, const PlantedModel& model);

}  // namespace tsbm
