#include "bosonic/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace bosonic::report {

std::string format_float(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::domain_error("table row width does not match the header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_float(row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::json doc;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::domain_error("table row width does not match the header");
    }
    doc["rows"].push_back(row);
  }
  out << doc.dump() << '\n';
}

void write_gnuplot_script(std::ostream& out, const std::string& csv_name,
                          const std::string& title, int xcol, int ycol,
                          const std::string& xlabel, const std::string& ylabel) {
  out << "set datafile separator ','\n"
      << "set key off\n"
      << "set title '" << title << "'\n"
      << "set xlabel '" << xlabel << "'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "plot '" << csv_name << "' using " << xcol << ':' << ycol
      << " skip 1 with linespoints\n";
}

}  // namespace bosonic::report
