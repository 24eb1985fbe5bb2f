#include "io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

namespace tsbm {

namespace {

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' '))
    s.pop_back();
  std::size_t lead = 0;
  while (lead < s.size() && s[lead] == ' ') ++lead;
  return s.substr(lead);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(strip(line.substr(start)));
      break;
    }
    fields.push_back(strip(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::int64_t parse_int(const std::string& field, const std::string& path, long line,
                       const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(path, line, std::string("invalid ") + what + " '" + field + "'");
  return value;
}

double parse_double(const std::string& field, const std::string& path, long line,
                    const char* what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size() || !std::isfinite(value)) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw ParseError(path, line, std::string("invalid ") + what + " '" + field + "'");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

void expect_header(std::ifstream& in, const std::string& path, const char* header) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path, 1, std::string("missing header '") + header + "'");
  if (strip(line) != header)
    throw ParseError(path, 1, std::string("expected header '") + header + "', got '" +
                                  strip(line) + "'");
}

}  // namespace

InteractionTensor read_aggregated_csv(const std::string& path, int n_nodes,
                                      int n_intervals) {
  std::ifstream in = open_input(path);
  expect_header(in, path, "src,dst,interval,count");

  std::vector<EdgeRecord> records;
  std::vector<long> lines;
  std::string line;
  long line_no = 1;
  std::int64_t max_node = -1, max_interval = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 4)
      throw ParseError(path, line_no,
                       "expected 4 fields, got " + std::to_string(fields.size()));
    EdgeRecord r;
    r.i = static_cast<std::int32_t>(parse_int(fields[0], path, line_no, "src"));
    r.j = static_cast<std::int32_t>(parse_int(fields[1], path, line_no, "dst"));
    r.u = static_cast<std::int32_t>(parse_int(fields[2], path, line_no, "interval"));
    r.count = parse_int(fields[3], path, line_no, "count");
    records.push_back(r);
    lines.push_back(line_no);
    max_node = std::max<std::int64_t>(max_node, std::max(r.i, r.j));
    max_interval = std::max<std::int64_t>(max_interval, r.u);
  }
  if (n_nodes == 0) n_nodes = static_cast<int>(max_node + 1);
  if (n_intervals == 0) n_intervals = static_cast<int>(max_interval + 1);
  if (n_nodes <= 0 || n_intervals <= 0)
    throw ParseError(path, line_no, "no rows to infer dimensions from");

  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const EdgeRecord& r = records[idx];
    const long at = lines[idx];
    if (r.i < 0 || r.i >= n_nodes || r.j < 0 || r.j >= n_nodes)
      throw ParseError(path, at, "node index outside [0, " + std::to_string(n_nodes) + ")");
    if (r.u < 0 || r.u >= n_intervals)
      throw ParseError(path, at,
                       "interval index outside [0, " + std::to_string(n_intervals) + ")");
    if (r.i == r.j) throw ParseError(path, at, "self loop on node " + std::to_string(r.i));
    if (r.count < 0) throw ParseError(path, at, "negative count");
  }
  return InteractionTensor::from_records(records, n_nodes, n_intervals);
}

void write_aggregated_csv(const std::string& path, const InteractionTensor& tensor) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "src,dst,interval,count\n";
  for (const EdgeRecord& c : tensor.cells())
    out << c.i << ',' << c.j << ',' << c.u << ',' << c.count << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

InteractionTensor read_stream_csv(const std::string& path, double delta, double horizon,
                                  int n_nodes) {
  std::ifstream in = open_input(path);
  expect_header(in, path, "t,src,dst");

  std::vector<Contact> contacts;
  std::string line;
  long line_no = 1;
  std::int64_t max_node = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3)
      throw ParseError(path, line_no,
                       "expected 3 fields, got " + std::to_string(fields.size()));
    Contact c;
    c.t = parse_double(fields[0], path, line_no, "time");
    c.i = static_cast<std::int32_t>(parse_int(fields[1], path, line_no, "src"));
    c.j = static_cast<std::int32_t>(parse_int(fields[2], path, line_no, "dst"));
    if (!(c.t > 0.0) || c.t > horizon)
      throw ParseError(path, line_no, "time outside (0, horizon]");
    if (c.i < 0 || c.j < 0) throw ParseError(path, line_no, "negative node index");
    if (c.i == c.j) throw ParseError(path, line_no, "self loop on node " + std::to_string(c.i));
    contacts.push_back(c);
    max_node = std::max<std::int64_t>(max_node, std::max(c.i, c.j));
  }
  if (n_nodes == 0) n_nodes = static_cast<int>(max_node + 1);
  if (n_nodes <= 0) throw ParseError(path, line_no, "no rows to infer the node count from");
  for (const Contact& c : contacts)
    if (c.i >= n_nodes || c.j >= n_nodes)
      throw std::invalid_argument("node index outside [0, " + std::to_string(n_nodes) + ")");
  return InteractionTensor::from_stream(contacts, delta, horizon, n_nodes);
}

}  // namespace tsbm
