#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdist {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One numeric value per row. A single non-numeric first row is treated as a
/// header; blank lines are skipped.
std::vector<double> read_numeric_column(const std::string& path);

/// Two comma-separated numeric values per row, same header handling.
std::vector<std::pair<double, double>> read_numeric_pairs(const std::string& path);

}  // namespace cdist
