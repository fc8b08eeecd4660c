#include "vortex/cli/config.hpp"

#include "vortex/amplitude.hpp"
#include "vortex/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vortex::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s(trim(text));
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("config: '" + std::string(key) +
                      "' expects a finite number, got '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  const auto s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("config: '" + std::string(key) +
                      "' expects an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const auto s = trim(text);
  if (s == "true" || s == "1" || s == "yes") {
    return true;
  }
  if (s == "false" || s == "0" || s == "no") {
    return false;
  }
  throw ConfigError("config: '" + std::string(key) +
                    "' expects true/false, got '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

// "4:1, 4:3"
std::vector<StateLabel> parse_states(std::string_view key,
                                     std::string_view text) {
  std::vector<StateLabel> out;
  for (auto item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) {
      throw ConfigError("config: '" + std::string(key) +
                        "' expects n:l pairs, got '" + std::string(item) + "'");
    }
    out.push_back({parse_int(key, parts[0]), parse_int(key, parts[1])});
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  for (auto item : split(text, ',')) {
    out.push_back(parse_int(key, item));
  }
  return out;
}

} // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  if (name == "fields") return Subcommand::fields;
  if (name == "amplitude-scan") return Subcommand::amplitude_scan;
  if (name == "ratios") return Subcommand::ratios;
  if (name == "asymmetry") return Subcommand::asymmetry;
  if (name == "angmom") return Subcommand::angmom;
  return std::nullopt;
}

std::string_view to_string(Subcommand sub) {
  switch (sub) {
  case Subcommand::fields:
    return "fields";
  case Subcommand::amplitude_scan:
    return "amplitude-scan";
  case Subcommand::ratios:
    return "ratios";
  case Subcommand::asymmetry:
    return "asymmetry";
  case Subcommand::angmom:
    return "angmom";
  }
  return "?";
}

RunConfig default_config(Subcommand sub) {
  RunConfig c;
  c.subcommand = sub;
  switch (sub) {
  case Subcommand::fields:
    c.m_gamma = 4;
    break;
  case Subcommand::amplitude_scan:
    break;
  case Subcommand::ratios:
    c.states = {{4, 1}, {4, 3}};
    break;
  case Subcommand::asymmetry:
    c.b_max = 1.5;
    c.b_step = 0.01;
    break;
  case Subcommand::angmom:
    c.m_gamma_list = {-2, -1, 0, 1, 2, 3, 4};
    break;
  }
  return c;
}

double RunConfig::resolved_omega() const {
  if (omega_hartree) {
    return *omega_hartree;
  }
  if (wavelength_nm) {
    return beam::BeamParams::from_wavelength_nm(*wavelength_nm, theta_k,
                                                m_gamma, helicity)
        .omega();
  }
  if (subcommand == Subcommand::fields || subcommand == Subcommand::angmom) {
    return beam::BeamParams::from_wavelength_nm(500.0, theta_k, m_gamma,
                                                helicity)
        .omega();
  }
  return amplitude::photon_energy_for(states.front().n_f);
}

beam::BeamParams RunConfig::beam() const {
  return beam::BeamParams(resolved_omega(), theta_k, m_gamma, helicity);
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("subcommand", std::string(to_string(subcommand)));
  std::string source = omega_hartree   ? "omega_hartree"
                       : wavelength_nm ? "wavelength_nm"
                       : (subcommand == Subcommand::fields ||
                          subcommand == Subcommand::angmom)
                           ? "default_500nm"
                           : "resonance";
  out.emplace_back("frequency_source", source);
  const auto b = beam();
  out.emplace_back("omega_hartree", format_number(b.omega()));
  out.emplace_back("wavelength_nm", format_number(b.wavelength_nm()));
  out.emplace_back("theta_k", format_number(theta_k));
  out.emplace_back("m_gamma", std::to_string(m_gamma));
  out.emplace_back("helicity", std::to_string(helicity));
  out.emplace_back("m_bar", std::to_string(m_bar));
  std::string st;
  for (std::size_t i = 0; i < states.size(); ++i) {
    st += (i ? "," : "") + std::to_string(states[i].n_f) + ":" +
          std::to_string(states[i].l_f);
  }
  out.emplace_back("states", st);
  out.emplace_back("b_min", format_number(b_min));
  out.emplace_back("b_max", format_number(b_max));
  out.emplace_back("b_step", format_number(b_step));
  out.emplace_back("grid_extent", format_number(grid_extent));
  out.emplace_back("grid_points", std::to_string(grid_points));
  out.emplace_back("weight_2pi_rho", weight_2pi_rho ? "true" : "false");
  out.emplace_back("kappa_R", format_number(kappa_radius));
  std::string ml;
  for (std::size_t i = 0; i < m_gamma_list.size(); ++i) {
    ml += (i ? "," : "") + std::to_string(m_gamma_list[i]);
  }
  out.emplace_back("m_gamma_list", ml);
  return out;
}

void apply_setting(RunConfig &c, std::string_view raw_key,
                   std::string_view value) {
  const auto key = trim(raw_key);
  if (key == "wavelength_nm") {
    c.wavelength_nm = parse_double(key, value);
  } else if (key == "omega_hartree") {
    c.omega_hartree = parse_double(key, value);
  } else if (key == "theta_k") {
    c.theta_k = parse_double(key, value);
  } else if (key == "m_gamma") {
    c.m_gamma = parse_int(key, value);
  } else if (key == "helicity") {
    c.helicity = parse_int(key, value);
  } else if (key == "m_bar") {
    c.m_bar = parse_int(key, value);
  } else if (key == "states") {
    c.states = parse_states(key, value);
  } else if (key == "b_min") {
    c.b_min = parse_double(key, value);
  } else if (key == "b_max") {
    c.b_max = parse_double(key, value);
  } else if (key == "b_step") {
    c.b_step = parse_double(key, value);
  } else if (key == "grid_extent") {
    c.grid_extent = parse_double(key, value);
  } else if (key == "grid_points") {
    c.grid_points = parse_int(key, value);
  } else if (key == "weight_2pi_rho") {
    c.weight_2pi_rho = parse_bool(key, value);
  } else if (key == "kappa_R") {
    c.kappa_radius = parse_double(key, value);
  } else if (key == "m_gamma_list") {
    c.m_gamma_list = parse_int_list(key, value);
  } else if (key == "threads") {
    c.threads = parse_int(key, value);
  } else {
    throw ConfigError("config: unknown key '" + std::string(key) + "'");
  }
}

void apply_text(RunConfig &c, std::string_view text) {
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    apply_setting(c, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_file(RunConfig &c, const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_text(c, ss.str());
}

void apply_override(RunConfig &c, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("--set expects key=value, got '" +
                      std::string(assignment) + "'");
  }
  apply_setting(c, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void validate(const RunConfig &c) {
  if (c.wavelength_nm && c.omega_hartree) {
    throw ConfigError("config: give wavelength_nm or omega_hartree, not both");
  }
  if (c.wavelength_nm && *c.wavelength_nm <= 0.0) {
    throw ConfigError("config: wavelength_nm must be > 0");
  }
  if (c.omega_hartree && *c.omega_hartree <= 0.0) {
    throw ConfigError("config: omega_hartree must be > 0");
  }
  if (!(c.theta_k > 0.0 && c.theta_k < 0.5 * std::acos(-1.0))) {
    throw ConfigError("config: theta_k must lie in (0, pi/2)");
  }
  if (c.helicity != 1 && c.helicity != -1) {
    throw ConfigError("config: helicity must be +1 or -1");
  }
  if (c.states.empty()) {
    throw ConfigError("config: states must not be empty");
  }
  for (const auto &s : c.states) {
    if (s.n_f < 2 || s.n_f > 10 || s.l_f < 0 || s.l_f >= s.n_f) {
      throw ConfigError("config: state " + std::to_string(s.n_f) + ":" +
                        std::to_string(s.l_f) +
                        " needs 2 <= n_f <= 10 and 0 <= l_f < n_f");
    }
    if (c.subcommand == Subcommand::ratios && s.l_f < 1) {
      throw ConfigError("config: ratios need l_f >= 1");
    }
  }
  if (c.subcommand == Subcommand::amplitude_scan && c.states.size() != 1) {
    throw ConfigError("config: amplitude-scan takes exactly one state");
  }
  if (!(c.b_step > 0.0)) {
    throw ConfigError("config: b_step must be > 0");
  }
  if (c.b_min < 0.0 || c.b_max < c.b_min) {
    throw ConfigError("config: need 0 <= b_min <= b_max");
  }
  if (c.grid_points < 2) {
    throw ConfigError("config: grid_points must be >= 2");
  }
  if (!(c.grid_extent > 0.0)) {
    throw ConfigError("config: grid_extent must be > 0");
  }
  if (!(c.kappa_radius > 0.0)) {
    throw ConfigError("config: kappa_R must be > 0");
  }
  if (c.m_gamma_list.empty()) {
    throw ConfigError("config: m_gamma_list must not be empty");
  }
  if (c.threads < 1) {
    throw ConfigError("config: threads must be >= 1");
  }
}

int resolve_threads(const RunConfig &c) {
  if (const char *env = std::getenv("VORTEX_XSEC_THREADS")) {
    const int n = parse_int("VORTEX_XSEC_THREADS", env);
    if (n < 1) {
      throw ConfigError("VORTEX_XSEC_THREADS must be >= 1");
    }
    return n;
  }
  return c.threads;
}

} // namespace vortex::cli
