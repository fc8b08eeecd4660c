#pragma once

#include "vortex/beam.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vortex::cli {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { fields, amplitude_scan, ratios, asymmetry, angmom };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand sub);

struct StateLabel {
  int n_f;
  int l_f;
  bool operator==(const StateLabel &) const = default;
};

//! Resolved run configuration.
/*! Built from per-subcommand defaults, then a flat `key = value` file,
    then `--set key=value` overrides. Impact parameters and grid extents are
    in photon wavelengths.
*/
struct RunConfig {
  Subcommand subcommand = Subcommand::ratios;

  // at most one of these; neither means the subcommand default
  // (500 nm for fields, resonance with the first state otherwise)
  std::optional<double> wavelength_nm;
  std::optional<double> omega_hartree;
  double theta_k = 0.2;
  int m_gamma = 3;
  int helicity = 1;
  int m_bar = 2;
  std::vector<StateLabel> states{{4, 1}};

  double b_min = 0.0;
  double b_max = 3.0;
  double b_step = 0.015;

  double grid_extent = 12.0; // half-width
  int grid_points = 121;
  bool weight_2pi_rho = false;

  double kappa_radius = 1e3;
  std::vector<int> m_gamma_list{1, 2, 3, 4};

  int threads = 1;

  /// Photon energy after applying the defaults above.
  double resolved_omega() const;
  beam::BeamParams beam() const;

  /// (key, value) pairs in a fixed order, for the CSV header.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

RunConfig default_config(Subcommand sub);

/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(RunConfig &config, std::string_view key,
                   std::string_view value);

/// `key = value` lines; blank lines and `#` comments ignored.
void apply_text(RunConfig &config, std::string_view text);

/// Throws IoError if the file cannot be read.
void apply_file(RunConfig &config, const std::filesystem::path &path);

/// Parses `key=value` (one --set argument).
void apply_override(RunConfig &config, std::string_view assignment);

/// Cross-field checks; throws ConfigError.
void validate(const RunConfig &config);

/// Worker count: VORTEX_XSEC_THREADS if set, else config.threads.
int resolve_threads(const RunConfig &config);

} // namespace vortex::cli
