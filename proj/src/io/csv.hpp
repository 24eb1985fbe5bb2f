#pragma once

#include <stdexcept>
#include <string>

#include "core/tensor.hpp"

namespace tsbm {

// Malformed input; `line` is 1-based and part of what().
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, long line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Aggregated format, header `src,dst,interval,count`; 0-based integer fields.
// Dimensions of 0 are inferred as max index + 1.
InteractionTensor read_aggregated_csv(const std::string& path, int n_nodes = 0,
                                      int n_intervals = 0);
void write_aggregated_csv(const std::string& path, const InteractionTensor& tensor);

// Stream format, header `t,src,dst`; t in real seconds over (0, horizon].
InteractionTensor read_stream_csv(const std::string& path, double delta, double horizon,
                                  int n_nodes = 0);

}  // namespace tsbm
