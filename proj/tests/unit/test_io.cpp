#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "io/digest.hpp"
#include "io/json_io.hpp"
#include "simulate/planted.hpp"

using namespace tsbm;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "tsbm_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("partition json round trip") {
  const Partition p{{0, 1, 2, 1, 0}, {0, 0, 1}, 3, 2};
  const auto path = (scratch_dir() / "partition.json").string();
  write_partition_json(path, p);
  const Partition back = read_partition_json(path);
  CHECK(back == p);

  // spec key order is preserved on disk
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("node_labels") < text.find("interval_labels"));
  CHECK(text.find("interval_labels") < text.find("\"K\""));
  CHECK(text.find("\"K\"") < text.find("\"D\""));
}

TEST_CASE("partition json rejects malformed files") {
  const auto path = (scratch_dir() / "broken.json").string();
  {
    std::ofstream out(path);
    out << "{\"node_labels\": [0, 1]}";
  }
  CHECK_THROWS(read_partition_json(path));
  {
    std::ofstream out(path);
    out << "{\"node_labels\": [0, 2], \"interval_labels\": [0], \"K\": 2, \"D\": 1}";
  }
  CHECK_THROWS_AS(read_partition_json(path), std::invalid_argument);  // gap in ids
  CHECK_THROWS(read_partition_json((scratch_dir() / "missing.json").string()));
}

TEST_CASE("truth json reports the effective clustering and reads as a partition") {
  auto graph = scenario1(2.4, 1.2, 12, 9, 3);
  // force an unused planted cluster id to check compaction
  for (auto& c : graph.node_labels)
    if (c == 1) c = 2;
  const auto path = (scratch_dir() / "truth.json").string();
  write_truth_json(path, graph);
  const Partition truth = read_partition_json(path);
  CHECK(truth.n_nodes() == 12);
  CHECK(truth.n_intervals() == 9);
  CHECK(truth.K == 2);
  truth.validate();
}

TEST_CASE("model json round trip") {
  const PlantedModel model = scenario2_model(10, 8);
  const auto path = (scratch_dir() / "model.json").string();
  write_model_json(path, model);
  const PlantedModel back = read_model_json(path);
  CHECK(back.n_nodes == model.n_nodes);
  CHECK(back.node_weights == model.node_weights);
  CHECK(back.rates == model.rates);
}

TEST_CASE("digest is stable and content-sensitive") {
  const auto path_a = (scratch_dir() / "a.bin").string();
  const auto path_b = (scratch_dir() / "b.bin").string();
  {
    std::ofstream a(path_a), b(path_b);
    a << "payload";
    b << "payloae";
  }
  CHECK(file_digest(path_a) == file_digest(path_a));
  CHECK(file_digest(path_a) != file_digest(path_b));
  CHECK(fnv1a_hex("").size() == 16);
}
