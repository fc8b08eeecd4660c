// vortex-xsec: photoexcitation of hydrogen by twisted (Bessel-mode) photons.
//
//   vortex-xsec <subcommand> [--config <path>] [--out <path>] [--set key=value ...]
//
// Exit codes: 0 success, 2 configuration error, 3 quadrature did not
// converge, 4 I/O failure, 1 anything else.

#include "CLI11.hpp"

#include "vortex/cli/runs.hpp"
#include "vortex/errors.hpp"

#include <iostream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

} // namespace

int main(int argc, char **argv) {
  using namespace vortex;

  CLI::App app{"Twisted-photon photoexcitation of hydrogen: field maps, "
               "amplitudes, ratios, asymmetries"};
  std::string subcommand;
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  app.add_option("subcommand", subcommand,
                 "fields | amplitude-scan | ratios | asymmetry | angmom")
      ->required();
  app.add_option("--config", config_path, "flat key = value config file");
  app.add_option("--out", out_path, "output CSV (default: stdout)");
  app.add_option("--set", overrides, "key=value override (repeatable)")
      ->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const auto sub = cli::parse_subcommand(subcommand);
    if (!sub) {
      throw cli::ConfigError("unknown subcommand '" + subcommand + "'");
    }
    auto config = cli::default_config(*sub);
    if (!config_path.empty()) {
      cli::apply_file(config, config_path);
    }
    for (const auto &o : overrides) {
      cli::apply_override(config, o);
    }
    const auto csv = cli::run(config);
    if (out_path.empty()) {
      std::cout << csv.str();
      std::cout.flush();
      if (!std::cout) {
        throw cli::IoError("write to stdout failed");
      }
    } else {
      csv.write(out_path);
    }
    return 0;
  } catch (const cli::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidQuantumNumbers &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DegenerateError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConvergenceError &e) {
    std::cerr << "quadrature error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const cli::IoError &e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
