// Tabular output shared by the benchmark and convergence tools.

#ifndef RIEMANN_CORE_REPORT_HPP
#define RIEMANN_CORE_REPORT_HPP

#include <string>
#include <vector>

namespace riemann::report {

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // columns whose values vary run to run (timings); flagged in the output
  std::vector<std::string> nondeterministic_columns;
};

std::string format_double(double value, int precision = 6);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string to_markdown(const Table& table);

// format is one of "csv", "json", "md"
std::string render(const Table& table, const std::string& format);

}  // namespace riemann::report

#endif
