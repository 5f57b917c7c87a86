#include "bicons/io/table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bicons/numerics/error.hpp"

namespace bicons::io {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) os << ',';
    os << table.header[j];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw Error(ErrorCode::InvalidArgument, "CSV row width differs from header");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << format_number(row[j]);
    }
    os << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path);
}

}  // namespace bicons::io
