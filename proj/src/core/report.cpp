#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace riemann::report {

std::string format_double(double value, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << value;
  return os.str();
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t j = 0; j < table.columns.size(); ++j)
    os << (j ? "," : "") << csv_escape(table.columns[j]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_escape(row[j]);
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& table) {
  nlohmann::json j;
  j["title"] = table.title;
  j["columns"] = table.columns;
  j["nondeterministic_columns"] = table.nondeterministic_columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t k = 0; k < row.size() && k < table.columns.size(); ++k)
      obj[table.columns[k]] = row[k];
    j["rows"].push_back(obj);
  }
  return j.dump(2) + "\n";
}

std::string to_markdown(const Table& table) {
  std::vector<std::size_t> widths(table.columns.size());
  auto header = table.columns;
  for (std::size_t j = 0; j < header.size(); ++j) {
    const bool nondet = std::find(table.nondeterministic_columns.begin(),
                                  table.nondeterministic_columns.end(),
                                  header[j]) != table.nondeterministic_columns.end();
    if (nondet) header[j] += " *";
    widths[j] = header[j].size();
  }
  for (const auto& row : table.rows)
    for (std::size_t j = 0; j < row.size() && j < widths.size(); ++j)
      widths[j] = std::max(widths[j], row[j].size());

  std::ostringstream os;
  if (!table.title.empty()) os << "### " << table.title << "\n\n";
  auto emit_row = [&](const std::vector<std::string>& row) {
    os << '|';
    for (std::size_t j = 0; j < widths.size(); ++j) {
      const std::string& cell = j < row.size() ? row[j] : "";
      os << ' ' << cell << std::string(widths[j] - cell.size(), ' ') << " |";
    }
    os << '\n';
  };
  emit_row(header);
  os << '|';
  for (std::size_t w : widths) os << std::string(w + 2, '-') << '|';
  os << '\n';
  for (const auto& row : table.rows) emit_row(row);
  if (!table.nondeterministic_columns.empty())
    os << "\n\\* timing column, varies run to run\n";
  return os.str();
}

std::string render(const Table& table, const std::string& format) {
  if (format == "csv") return to_csv(table);
  if (format == "json") return to_json(table);
  if (format == "md" || format == "markdown") return to_markdown(table);
  throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace riemann::report
