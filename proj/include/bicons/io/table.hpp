#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicons::io {

/// Column names and numeric rows, written as CSV with 17 significant digits.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string format_number(double x);
void write_csv(std::ostream& os, const Table& table);
std::string to_csv(const Table& table);

/// Writes `text` to `path` in one go; Io error on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace bicons::io
