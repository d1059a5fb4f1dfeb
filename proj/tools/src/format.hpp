#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace risgg::tools {

/// Shortest decimal string that parses back to exactly `x` ("nan", "inf" for
/// non-finite values).
std::string fmt(double x);

/// Comma separated values with a leading "# key = value" comment block.
class TableWriter {
public:
  TableWriter(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& meta,
              const std::vector<std::string>& columns);

  void row(const std::vector<std::string>& cells);

private:
  std::ostream& os_;
  std::size_t width_;
};

}  // namespace risgg::tools
