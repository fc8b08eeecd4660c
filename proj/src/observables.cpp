#include "vortex/observables.hpp"

#include "vortex/constants.hpp"
#include "vortex/errors.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <limits>

namespace vortex::observables {

using amplitude::Complex;
using specfun::bessel_j;

namespace {

// Oscillatory integrals over [0, R]: panels of about half a Bessel period.
template <class F>
double integrate_disk(F &&f, double kappa, double radius, double abs_tol = 0.0) {
  const quad::GaussLegendre rule(16);
  quad::AdaptiveOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = abs_tol;
  opt.initial_panels = std::max(8, int(kappa * radius / 1.5) + 1);
  opt.max_panels = std::max(4096, 8 * opt.initial_panels);
  const auto res = quad::integrate_adaptive(f, 0.0, radius, rule, opt);
  if (!res.converged) {
    throw ConvergenceError("disk integral did not converge", res.value,
                           res.error);
  }
  return res.value;
}

} // namespace

double sigma_unit(const BeamParams &beam) {
  const double a = constants::fine_structure;
  return 8.0 * constants::pi * constants::pi * constants::pi * a * a * a /
         (3.0 * beam.k_z());
}

AveragedCrossSection sigma_avg(const AtomicState &final_state,
                               const BeamParams &beam,
                               ReducedFactorCache &cache) {
  const Complex c = amplitude::helicity_combination(final_state, beam, cache);
  return {final_state, beam, std::norm(c)};
}

AveragedCrossSection sigma_avg(const AtomicState &final_state,
                               const BeamParams &beam) {
  ReducedFactorCache cache;
  return sigma_avg(final_state, beam, cache);
}

double disk_bessel_integral(int nu, double kappa, double radius) {
  return integrate_disk(
      [&](double b) {
        const double j = bessel_j(nu, kappa * b);
        return b * j * j;
      },
      kappa, radius);
}

double disk_bessel_limit(double kappa, double radius) {
  return radius / (constants::pi * kappa);
}

double disk_flux(const BeamParams &beam, double radius) {
  // |A|^2 summed over the three channels; the eta's are orthonormal and
  // the azimuthal phases drop out of the modulus.
  const int m = beam.m_gamma();
  const int lam = beam.helicity();
  const double th = beam.theta_k();
  const double w0 = 0.5 * std::sin(th) * std::sin(th);
  const double wp = std::pow(std::cos(0.5 * th), 4);
  const double wm = std::pow(std::sin(0.5 * th), 4);
  const double kappa = beam.kappa();
  const double integral = integrate_disk(
      [&](double rho) {
        const double x = kappa * rho;
        const double j0 = bessel_j(m, x);
        const double jp = bessel_j(m - lam, x);
        const double jm = bessel_j(m + lam, x);
        return rho * (w0 * j0 * j0 + wp * jp * jp + wm * jm * jm);
      },
      kappa, radius);
  const double mean_a2 = kappa / (2.0 * constants::pi) * 2.0 * constants::pi *
                         integral / (constants::pi * radius * radius);
  // 2 omega |A|^2 * (k_z / omega)
  return 2.0 * mean_a2 * beam.k_z();
}

double disk_flux_limit(const BeamParams &beam, double radius) {
  return 2.0 * beam.k_z() / (constants::pi * constants::pi * radius);
}

double f_twisted(int n_f, int l_f, const BeamParams &beam,
                 ReducedFactorCache &cache) {
  const auto cs = amplitude::helicity_combinations(n_f, l_f, beam, cache);
  double total = 0.0, unique = 0.0;
  for (int m = -l_f; m <= l_f; ++m) {
    const double s = std::norm(cs[m + l_f]);
    total += s;
    if (m != beam.helicity()) {
      unique += s;
    }
  }
  if (!(total > 0.0)) {
    throw DegenerateError("f_twisted: all averaged cross sections vanish");
  }
  return unique / total;
}

double f_twisted(int n_f, int l_f, const BeamParams &beam) {
  ReducedFactorCache cache;
  return f_twisted(n_f, l_f, beam, cache);
}

double sigma_plane_wave(int n_f, int l_f, const BeamParams &beam,
                        const amplitude::QuadratureSettings &settings) {
  const int lam = beam.helicity();
  if (std::abs(lam) > l_f) {
    return 0.0;
  }
  const auto g = amplitude::g_plane_wave(AtomicState(n_f, l_f, lam), lam,
                                         beam.omega(), settings);
  return std::norm(g.value) * beam.k_z() / beam.wavenumber();
}

double r_twisted(int n_f, int l_f, const BeamParams &beam,
                 ReducedFactorCache &cache) {
  const double pw = sigma_plane_wave(n_f, l_f, beam, cache.settings());
  if (!(pw > std::numeric_limits<double>::min())) {
    throw DegenerateError("r_twisted: plane-wave reference vanishes for l_f = " +
                          std::to_string(l_f));
  }
  double total = 0.0;
  for (const auto &c :
       amplitude::helicity_combinations(n_f, l_f, beam, cache)) {
    total += std::norm(c);
  }
  return total / pw;
}

double r_twisted(int n_f, int l_f, const BeamParams &beam) {
  ReducedFactorCache cache;
  return r_twisted(n_f, l_f, beam, cache);
}

//------------------------------------------------------------------------------
AsymmetryScan::AsymmetryScan(int n_f, int l_f, int m_bar,
                             const BeamParams &beam_template,
                             ReducedFactorCache &cache)
    : m_l_f(l_f), m_minus(beam_template.with_mode(m_bar - 1, -1)),
      m_plus(beam_template.with_mode(m_bar + 1, 1)),
      m_c_minus(amplitude::helicity_combinations(n_f, l_f, m_minus, cache)),
      m_c_plus(amplitude::helicity_combinations(n_f, l_f, m_plus, cache)) {}

std::pair<double, double> AsymmetryScan::rates(double b) const {
  if (!std::isfinite(b) || b < 0.0) {
    throw DomainError("asymmetry: impact parameter must be finite and >= 0");
  }
  auto rate = [&](const BeamParams &beam, const std::vector<Complex> &cs) {
    const double pre = amplitude::amplitude_prefactor(beam);
    double sum = 0.0;
    for (int m = -m_l_f; m <= m_l_f; ++m) {
      const int dm = m - beam.m_gamma();
      const double j =
          b == 0.0 ? (dm == 0 ? 1.0 : 0.0) : bessel_j(dm, beam.kappa() * b);
      sum += pre * pre * j * j * std::norm(cs[m + m_l_f]);
    }
    return sum;
  };
  return {rate(m_minus, m_c_minus), rate(m_plus, m_c_plus)};
}

AsymmetryPoint AsymmetryScan::at(double b) const {
  const auto [minus, plus] = rates(b);
  const double den = minus + plus;
  if (!(den > std::numeric_limits<double>::min())) {
    return {b, std::nullopt};
  }
  return {b, (minus - plus) / den};
}

double AsymmetryScan::disk_averaged(double radius) const {
  const double kappa = m_plus.kappa();
  const double sum = integrate_disk(
      [&](double b) {
        const auto [m, p] = rates(b);
        return b * (m + p);
      },
      kappa, radius);
  if (!(sum > 0.0)) {
    throw DegenerateError("asymmetry: both rates vanish on the disk");
  }
  // the difference cancels towards zero; measure its accuracy against the sum
  const double diff = integrate_disk(
      [&](double b) {
        const auto [m, p] = rates(b);
        return b * (m - p);
      },
      kappa, radius, 1e-12 * sum);
  return diff / sum;
}

AsymmetryPoint a_lambda(int n_f, int l_f, int m_bar,
                        const BeamParams &beam_template, double b) {
  ReducedFactorCache cache;
  return AsymmetryScan(n_f, l_f, m_bar, beam_template, cache).at(b);
}

} // namespace vortex::observables
