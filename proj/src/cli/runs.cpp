#include "vortex/cli/runs.hpp"

#include "vortex/amplitude.hpp"
#include "vortex/angmom.hpp"
#include "vortex/constants.hpp"
#include "vortex/observables.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#ifndef VORTEX_VERSION
#define VORTEX_VERSION "dev"
#endif

namespace vortex::cli {

namespace {

using amplitude::AtomicState;
using amplitude::ReducedFactorCache;

// Runs fn(i) for i in [0, n) on `threads` workers. Callers write results by
// index, so output order never depends on scheduling.
template <class F> void parallel_for(std::size_t n, int threads, F &&fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const auto workers = std::min<std::size_t>(threads, n);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
          }
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

CsvArtifact start(const RunConfig &config, std::string units) {
  CsvArtifact csv;
  csv.metadata.push_back(std::string("vortex-xsec ") + VORTEX_VERSION);
  for (const auto &[k, v] : config.echo()) {
    csv.metadata.push_back(k + " = " + v);
  }
  csv.metadata.push_back("units: " + std::move(units));
  return csv;
}

std::vector<double> b_grid(const RunConfig &c) {
  std::vector<double> out;
  const auto count =
      std::size_t(std::floor((c.b_max - c.b_min) / c.b_step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(c.b_min + double(i) * c.b_step);
  }
  return out;
}

// Fills the cache with every g a level needs, in parallel.
void warm_cache(ReducedFactorCache &cache,
                const std::vector<std::pair<StateLabel, beam::BeamParams>> &work,
                int threads) {
  struct Task {
    AtomicState state;
    int lambda;
    beam::BeamParams beam;
  };
  std::vector<Task> tasks;
  for (const auto &[label, beam] : work) {
    for (int m = -label.l_f; m <= label.l_f; ++m) {
      for (int lam = -1; lam <= 1; ++lam) {
        tasks.push_back({AtomicState(label.n_f, label.l_f, m), lam, beam});
      }
    }
  }
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    cache.get(tasks[i].state, tasks[i].lambda, tasks[i].beam);
  });
}

} // namespace

CsvArtifact run_fields(const RunConfig &config) {
  validate(config);
  const auto beam = config.beam();
  const int threads = resolve_threads(config);
  auto csv = start(config,
                   "x, y in photon wavelengths; S = Re(E) x Re(B) at z = 0, "
                   "t = 0 in atomic units (c = 1 field convention)" +
                       std::string(config.weight_2pi_rho
                                       ? "; S multiplied by 2 pi rho "
                                         "(rho in wavelengths)"
                                       : ""));
  csv.header = {"x", "y", "S_rho", "S_phi", "S_z"};

  const int n = config.grid_points;
  const double lambda = beam.wavelength();
  auto coord = [&](int i) {
    // exact zero at the centre for odd n
    return config.grid_extent * (2.0 * i - (n - 1)) / double(n - 1);
  };
  csv.rows.resize(std::size_t(n) * n);
  parallel_for(csv.rows.size(), threads, [&](std::size_t idx) {
    const int iy = int(idx / n);
    const int ix = int(idx % n);
    const double x = coord(ix);
    const double y = coord(iy);
    const auto f = beam::fields(beam, {0.0, x * lambda, y * lambda, 0.0});
    const double w =
        config.weight_2pi_rho ? 2.0 * constants::pi * std::hypot(x, y) : 1.0;
    csv.rows[idx] = {format_number(x), format_number(y),
                     format_number(w * f.S[0]), format_number(w * f.S[1]),
                     format_number(w * f.S[2])};
  });
  return csv;
}

CsvArtifact run_amplitude_scan(const RunConfig &config) {
  validate(config);
  const auto beam = config.beam();
  const int threads = resolve_threads(config);
  const auto label = config.states.front();
  ReducedFactorCache cache;
  warm_cache(cache, {{label, beam}}, threads);
  const auto cs =
      amplitude::helicity_combinations(label.n_f, label.l_f, beam, cache);

  auto csv = start(config, "b in photon wavelengths; |M| in e/(m_e a0) "
                           "(atomic units), relative values only");
  csv.header = {"b_over_lambda", "m_f", "abs_M"};
  const auto bs = b_grid(config);
  const int per_b = 2 * label.l_f + 1;
  csv.rows.resize(bs.size() * per_b);
  parallel_for(bs.size(), threads, [&](std::size_t i) {
    for (int m = -label.l_f; m <= label.l_f; ++m) {
      const auto amp = amplitude::amplitude(
          AtomicState(label.n_f, label.l_f, m), beam,
          bs[i] * beam.wavelength(), 0.0, cs[m + label.l_f]);
      csv.rows[i * per_b + (m + label.l_f)] = {
          format_number(bs[i]), std::to_string(m),
          format_number(std::abs(amp.value))};
    }
  });
  return csv;
}

CsvArtifact run_ratios(const RunConfig &config) {
  validate(config);
  const auto beam = config.beam();
  const int threads = resolve_threads(config);
  ReducedFactorCache cache;
  std::vector<std::pair<StateLabel, beam::BeamParams>> work;
  for (const auto &s : config.states) {
    work.emplace_back(s, beam);
  }
  warm_cache(cache, work, threads);

  auto csv = start(config, "f_twisted and r_twisted are dimensionless");
  csv.header = {"n_f", "l_f", "f_twisted", "r_twisted"};
  for (const auto &s : config.states) {
    csv.rows.push_back(
        {std::to_string(s.n_f), std::to_string(s.l_f),
         format_number(observables::f_twisted(s.n_f, s.l_f, beam, cache)),
         format_number(observables::r_twisted(s.n_f, s.l_f, beam, cache))});
  }
  return csv;
}

CsvArtifact run_asymmetry(const RunConfig &config) {
  validate(config);
  const auto beam = config.beam();
  const int threads = resolve_threads(config);
  const auto label = config.states.front();
  ReducedFactorCache cache;
  warm_cache(cache,
             {{label, beam.with_mode(config.m_bar - 1, -1)},
              {label, beam.with_mode(config.m_bar + 1, 1)}},
             threads);
  const observables::AsymmetryScan scan(label.n_f, label.l_f, config.m_bar,
                                        beam, cache);

  auto csv = start(config, "b in photon wavelengths; empty A_lambda marks a "
                           "point where both rates vanish");
  csv.header = {"b_over_lambda", "A_lambda"};
  const auto bs = b_grid(config);
  csv.rows.resize(bs.size());
  parallel_for(bs.size(), threads, [&](std::size_t i) {
    const auto p = scan.at(bs[i] * beam.wavelength());
    csv.rows[i] = {format_number(bs[i]),
                   p.value ? format_number(*p.value) : std::string()};
  });
  return csv;
}

CsvArtifact run_angmom(const RunConfig &config) {
  validate(config);
  auto csv = start(config, "projections in units of hbar");
  csv.header = {"m_gamma", "helicity", "theta_k", "spin", "orbital", "total"};
  const double omega = config.resolved_omega();
  for (int m : config.m_gamma_list) {
    for (int lam : {-1, 1}) {
      const beam::BeamParams b(omega, config.theta_k, m, lam);
      const auto budget = angmom::total_projection(b, config.kappa_radius);
      csv.rows.push_back({std::to_string(m), std::to_string(lam),
                          format_number(config.theta_k),
                          format_number(budget.spin),
                          format_number(budget.orbital),
                          format_number(budget.total)});
    }
  }
  return csv;
}

CsvArtifact run(const RunConfig &config) {
  switch (config.subcommand) {
  case Subcommand::fields:
    return run_fields(config);
  case Subcommand::amplitude_scan:
    return run_amplitude_scan(config);
  case Subcommand::ratios:
    return run_ratios(config);
  case Subcommand::asymmetry:
    return run_asymmetry(config);
  case Subcommand::angmom:
    return run_angmom(config);
  }
  throw ConfigError("unknown subcommand");
}

} // namespace vortex::cli
