#include "format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace risgg::tools {

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("fmt: to_chars failed");
  return std::string(buf, end);
}

TableWriter::TableWriter(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& meta,
                         const std::vector<std::string>& columns)
    : os_(os), width_(columns.size()) {
  for (const auto& [k, v] : meta) os_ << "# " << k << " = " << v << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
  os_ << '\n';
}

void TableWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("TableWriter: row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
  os_ << '\n';
}

}  // namespace risgg::tools
