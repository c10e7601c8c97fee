#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlen/cycles.hpp"
#include "ordlen/hilbert.hpp"

namespace ordlen {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int negative_answer = 2;
inline constexpr int limit_exceeded = 3;
}  // namespace exit_code

struct JobConfig {
  std::string command;
  std::string input_path;                  // "-" reads standard input
  std::optional<std::string> inline_input;  // takes precedence over input_path
  std::string format = "json";              // json | dot | table
  std::string output_path = "-";
  std::optional<int> bound;
  std::size_t max_cycles = kDefaultCycleLimit;
  std::size_t max_extenders = kDefaultExtenderLimit;
  int hole_cap = 12;
  std::uint64_t seed = 0;
  std::optional<std::vector<int>> rho;
  int size = 0;                       // element count for "random"
  std::string system = "location";  // facets: location | full
};

struct JobResult {
  int status = exit_code::ok;
  std::string output;
  std::string diagnostic;  // one line for standard error, empty on success
};

const std::vector<std::string>& command_names();

std::vector<int> parse_int_list(const std::string& text);

struct ParsedInput {
  IntervalOrder order;
  std::optional<IntervalRepresentation> intervals;  // when given as intervals
};

// Throws InvalidInput (with byte position for malformed JSON) and the order errors.
ParsedInput parse_input(const std::string& text);

JobResult dispatch(const JobConfig& config);

}  // namespace ordlen
