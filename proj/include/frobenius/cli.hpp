#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace frobenius {

enum class Command {
  FiniteTable,
  FiniteFrobenius,
  TorusSum,
  SunSum,
  FcMeasure,
  OpenFcMeasure,
  McCommprob,
  McBall,
  Validate,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Validate;
  std::string group;
  std::string element;
  std::string angles;                // --theta / --angles
  std::size_t n = 0;                 // --N for sun-sum
  std::int64_t depth = 10;
  std::vector<std::int64_t> depths;  // explicit sweep, overrides --depth
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::vector<double> epsilons{1e-6};
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 1;
  std::size_t chunk_size = 4096;
  double tolerance = 1e-9;
  std::size_t trials = 100;
  std::string witness_x;  // openfc-measure: also solve [x, h0] = element
  bool timing = true;     // include wall time in Monte Carlo reports
};

// Exit status: 0 success, 1 validation error, 2 computational error.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (two-word commands such as "sun sum" are accepted) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Depths reported by a sweep up to `depth`: every depth up to 50, then
// 1-2-5 steps, always ending at `depth`.
std::vector<std::int64_t> depth_schedule(std::int64_t depth);

}  // namespace frobenius
