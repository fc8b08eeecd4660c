#include "vortex/cli/csv.hpp"

#include "vortex/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace vortex::cli {

std::string format_number(double value) {
  if (value == 0.0) {
    return "0";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string CsvArtifact::str() const {
  std::string out;
  for (const auto &m : metadata) {
    out += "# " + m + "\n";
  }
  auto join = [&](const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += cells[i];
    }
    out += '\n';
  };
  join(header);
  for (const auto &r : rows) {
    join(r);
  }
  return out;
}

void CsvArtifact::write(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << str();
  out.flush();
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

} // namespace vortex::cli
