#pragma once

#include "aristotle/dynamics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace aristotle {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Header row: t, chart coordinate names, invariant names, then H when the
/// trajectory records energy. One row per step.
std::vector<std::string> csv_header(const Trajectory& trajectory);
void write_csv(const Trajectory& trajectory, std::ostream& out);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
};

/// Parses a numeric CSV with one header row. Throws InvalidInput on malformed input.
CsvTable read_csv(std::istream& in);

}  // namespace aristotle
