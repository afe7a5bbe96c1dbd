// report.hpp
// Deterministic tabular output shared by the CLI commands. CSV uses a fixed
// field order and %.17g floats so identical runs are byte-identical; the JSON
// writer carries the same numeric content.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonic::report {

std::string format_float(double value);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Header row, comma separators, LF line endings.
void write_csv(const Table& table, std::ostream& out);

/// {"columns": [...], "rows": [[...], ...]}
void write_json(const Table& table, std::ostream& out);

/// Minimal gnuplot script plotting column ycol against column xcol of the
/// named CSV file. Columns are 1-based as gnuplot counts them.
void write_gnuplot_script(std::ostream& out, const std::string& csv_name,
                          const std::string& title, int xcol, int ycol,
                          const std::string& xlabel, const std::string& ylabel);

}  // namespace bosonic::report
