// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fwlab/error.hpp"
#include "fwlab/harness.hpp"

namespace fwlab {

namespace {

std::string format_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_cell(const std::string &cell, std::size_t line) {
  double value = 0.0;
  const char *begin = cell.data();
  const char *end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (cell.empty() || ec != std::errc() || ptr != end)
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": non-numeric cell '" + cell + "'");
  return value;
}

} // namespace

std::string table_csv(const Table &table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += c ? "," : "";
    out += table.columns[c];
  }
  out += '\n';
  for (const auto &row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += c ? "," : "";
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

void emit_field_csv(const GridFunction &f, const std::filesystem::path &path) {
  Table table{"field", {"x", "value"}, {}};
  const auto samples = f.samples();
  for (std::size_t j = 0; j < samples.size(); ++j)
    table.rows.push_back({f.grid()->node(j), samples[j]});
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << table_csv(table);
  if (!out)
    fail(ErrorCode::Io, "write failed for " + path.string());
}

GridFunction read_field_csv(const std::filesystem::path &path, const GridPtr &grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::Io, "cannot open " + path.string());
  const std::string where = path.string() + ": ";

  std::string line;
  if (!std::getline(in, line) || trim(line) != "x,value")
    fail(ErrorCode::Parse, where + "header must be exactly 'x,value'");

  const std::size_t n = grid->size();
  const double tolerance = 1e-9 * grid->period();
  std::vector<double> samples;
  samples.reserve(n);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      fail(ErrorCode::Parse, where + "line " + std::to_string(line_no) + ": expected two columns");
    try {
      const double x = parse_cell(trim(std::string_view(line).substr(0, comma)), line_no);
      const double value = parse_cell(trim(std::string_view(line).substr(comma + 1)), line_no);
      const std::size_t j = samples.size();
      if (j >= n)
        fail(ErrorCode::InvalidArgument, "more than N = " + std::to_string(n) + " rows");
      if (std::abs(x - grid->node(j)) > tolerance) {
        std::ostringstream os;
        os << "line " << line_no << ": x = " << x << " is not grid node " << j << " ("
           << grid->node(j) << ")";
        fail(ErrorCode::InvalidArgument, os.str());
      }
      samples.push_back(value);
    } catch (const Error &e) {
      fail(e.code(), where + e.what());
    }
  }
  if (samples.size() != n)
    fail(ErrorCode::InvalidArgument, where + "expected " + std::to_string(n) + " rows, found " +
                                         std::to_string(samples.size()));
  return GridFunction::from_samples(grid, std::move(samples));
}

Table mask_table(const LPPartition &part) {
  Table table;
  table.name = "masks";
  table.columns = {"xi", "chi"};
  for (int q = 0; q <= part.q_max(); ++q)
    table.columns.push_back("phi_q" + std::to_string(q));
  const Grid &grid = *part.grid();
  const std::size_t n = grid.size();
  // Ascending xi: storage index of mode k for k = -N/2 .. N/2-1.
  for (long k = -static_cast<long>(n / 2); k < static_cast<long>(n / 2); ++k) {
    const std::size_t i = grid.index_of_mode(k);
    std::vector<double> row{grid.wavenumbers()[i], part.chi_mask()[i]};
    for (int q = 0; q <= part.q_max(); ++q)
      row.push_back(part.phi_mask(q)[i]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace fwlab
