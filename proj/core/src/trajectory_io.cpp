#include "aristotle/trajectory_io.hpp"

#include "aristotle/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace aristotle {

std::string format_double(double value) {
  if (value == 0.0) return "0";  // drop the sign of negative zero
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw InvalidInput("cannot format number");
  return std::string(buf.data(), end);
}

std::vector<std::string> csv_header(const Trajectory& trajectory) {
  std::vector<std::string> header{"t"};
  for (auto& name : chart_labels(trajectory.model)) header.push_back(name);
  for (auto& name : casimir_labels(trajectory.model)) header.push_back(name);
  if (!trajectory.energy.empty()) header.emplace_back("H");
  return header;
}

void write_csv(const Trajectory& trajectory, std::ostream& out) {
  const auto header = csv_header(trajectory);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t row = 0; row < trajectory.size(); ++row) {
    out << format_double(trajectory.times[row]);
    for (double v : trajectory.points[row].z) out << ',' << format_double(v);
    for (double v : trajectory.casimir_series[row].values) out << ',' << format_double(v);
    if (!trajectory.energy.empty()) out << ',' << format_double(trajectory.energy[row]);
    out << '\n';
  }
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidInput("no column named '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("CSV input is empty");
  table.header = split(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw InvalidInput("CSV line " + std::to_string(lineno) + " has " +
                         std::to_string(cells.size()) + " cells, expected " +
                         std::to_string(table.header.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw InvalidInput("CSV line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace aristotle
