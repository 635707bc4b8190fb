#include "frobenius/report.hpp"

#include <cstdio>

#include "frobenius/errors.hpp"

namespace frobenius {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return v;
        }
      },
      cell);
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

std::vector<std::string> estimate_fields(bool wall_time) {
  std::vector<std::string> f{"estimate", "standard_error", "samples", "hits",  "seed",         "epsilon",
                             "exact_equality", "metric", "group",   "group_digest", "chunk_size"};
  if (wall_time) f.push_back("wall_time_seconds");
  return f;
}

}  // namespace

void write_csv(std::ostream& out, const ConvergenceTable& table) {
  write_row(out, table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    for (const auto& c : row) fields.push_back(cell_text(c));
    write_row(out, fields);
  }
}

nlohmann::ordered_json to_json(const ConvergenceTable& table) {
  nlohmann::ordered_json j;
  j["command"] = table.command;
  j["version"] = table.version;
  j["group"] = table.group;
  j["group_digest"] = table.group_digest;
  j["sweep"] = table.sweep;
  j["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) std::visit([&](const auto& v) { r.push_back(v); }, c);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

void write_json(std::ostream& out, const ConvergenceTable& table) { out << to_json(table).dump(2) << "\n"; }

ConvergenceTable table_from_json(const nlohmann::json& j) {
  try {
    ConvergenceTable t;
    t.command = j.at("command").get<std::string>();
    t.version = j.at("version").get<std::string>();
    t.group = j.at("group").get<std::string>();
    t.group_digest = j.at("group_digest").get<std::string>();
    t.sweep = j.at("sweep").get<std::string>();
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& r : j.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : r) {
        if (c.is_number_integer()) {
          row.emplace_back(c.get<std::int64_t>());
        } else if (c.is_number()) {
          row.emplace_back(c.get<double>());
        } else {
          row.emplace_back(c.get<std::string>());
        }
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad table JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const MCEstimate& e) {
  nlohmann::ordered_json j;
  j["estimate"] = e.estimate;
  j["standard_error"] = e.standard_error;
  j["samples"] = e.samples;
  j["hits"] = e.hits;
  j["seed"] = e.seed;
  j["epsilon"] = e.epsilon;
  j["exact_equality"] = e.exact_equality;
  j["metric"] = e.metric;
  j["group"] = e.group;
  j["group_digest"] = e.group_digest;
  j["chunk_size"] = e.chunk_size;
  j["wall_time_seconds"] = e.wall_time_seconds;
  return j;
}

MCEstimate estimate_from_json(const nlohmann::json& j) {
  try {
    MCEstimate e;
    e.estimate = j.at("estimate").get<double>();
    e.standard_error = j.at("standard_error").get<double>();
    e.samples = j.at("samples").get<std::uint64_t>();
    e.hits = j.at("hits").get<std::uint64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.epsilon = j.at("epsilon").get<double>();
    e.exact_equality = j.at("exact_equality").get<bool>();
    e.metric = j.at("metric").get<std::string>();
    e.group = j.at("group").get<std::string>();
    e.group_digest = j.at("group_digest").get<std::string>();
    e.chunk_size = j.at("chunk_size").get<std::size_t>();
    if (j.contains("wall_time_seconds")) e.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad estimate JSON: ") + ex.what());
  }
}

void write_csv(std::ostream& out, const std::vector<MCEstimate>& estimates, bool include_wall_time) {
  write_row(out, estimate_fields(include_wall_time));
  for (const auto& e : estimates) {
    std::vector<std::string> f{format_double(e.estimate),
                               format_double(e.standard_error),
                               std::to_string(e.samples),
                               std::to_string(e.hits),
                               std::to_string(e.seed),
                               format_double(e.epsilon),
                               e.exact_equality ? "true" : "false",
                               e.metric,
                               e.group,
                               e.group_digest,
                               std::to_string(e.chunk_size)};
    if (include_wall_time) f.push_back(format_double(e.wall_time_seconds));
    write_row(out, f);
  }
}

void write_json(std::ostream& out, const std::vector<MCEstimate>& estimates, const std::string& command,
                bool include_wall_time) {
  auto dump = [&](const MCEstimate& e) {
    auto j = to_json(e);
    if (!include_wall_time) j.erase("wall_time_seconds");
    return j;
  };
  if (estimates.size() == 1) {
    out << dump(estimates.front()).dump(2) << "\n";
    return;
  }
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : estimates) arr.push_back(dump(e));
  j["estimates"] = std::move(arr);
  out << j.dump(2) << "\n";
}

}  // namespace frobenius
