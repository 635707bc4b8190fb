#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "frobenius/montecarlo.hpp"

namespace frobenius {

inline constexpr const char* kVersion = "0.1.0";

using Cell = std::variant<std::int64_t, double, std::string>;

// Rows are kept in the order of the sweep parameter (first column).
struct ConvergenceTable {
  std::string command;
  std::string version = kVersion;
  std::string group;
  std::string group_digest;
  std::string sweep;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const ConvergenceTable&) const = default;
};

std::string format_double(double value);  // %.17g
std::string csv_field(const std::string& field);

void write_csv(std::ostream& out, const ConvergenceTable& table);
void write_json(std::ostream& out, const ConvergenceTable& table);

nlohmann::ordered_json to_json(const ConvergenceTable& table);
ConvergenceTable table_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const MCEstimate& estimate);
MCEstimate estimate_from_json(const nlohmann::json& j);

// Field order mirrors MCEstimate. With include_wall_time = false the output
// is a deterministic function of the inputs.
void write_csv(std::ostream& out, const std::vector<MCEstimate>& estimates, bool include_wall_time = true);
void write_json(std::ostream& out, const std::vector<MCEstimate>& estimates, const std::string& command,
                bool include_wall_time = true);

}  // namespace frobenius
