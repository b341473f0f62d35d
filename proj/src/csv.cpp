#include "cdist/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace cdist {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<double> parse_cell(const std::string& cell) {
  const std::string t = trim(cell);
  if (t.empty()) return std::nullopt;
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open file: " + path);
  return in;
}

}  // namespace

std::vector<double> read_numeric_column(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto v = parse_cell(line);
    if (!v) {
      if (first_data_row) {  // header row
        first_data_row = false;
        continue;
      }
      throw CsvError(path + ":" + std::to_string(line_no) + ": not a number: " + trim(line));
    }
    first_data_row = false;
    values.push_back(*v);
  }
  if (values.empty()) throw CsvError(path + ": no numeric rows");
  return values;
}

std::vector<std::pair<double, double>> read_numeric_pairs(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::pair<double, double>> pairs;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);
    std::optional<double> x, y;
    if (cells.size() == 2) {
      x = parse_cell(cells[0]);
      y = parse_cell(cells[1]);
    }
    if (!x || !y) {
      if (first_data_row) {  // header row
        first_data_row = false;
        continue;
      }
      throw CsvError(path + ":" + std::to_string(line_no) +
                     ": expected two comma-separated numbers: " + trim(line));
    }
    first_data_row = false;
    pairs.emplace_back(*x, *y);
  }
  if (pairs.empty()) throw CsvError(path + ": no numeric rows");
  return pairs;
}

}  // namespace cdist
