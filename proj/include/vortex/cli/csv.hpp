#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vortex::cli {

/// Fixed 12-significant-digit formatting; -0 prints as 0.
std::string format_number(double value);

//! Comma-separated table with `#` metadata lines, LF line endings.
struct CsvArtifact {
  std::vector<std::string> metadata; // without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
  /// Throws IoError if the file cannot be written.
  void write(const std::filesystem::path &path) const;
};

} // namespace vortex::cli
