#include "vortex/amplitude.hpp"

#include "vortex/constants.hpp"
#include "vortex/errors.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <string>

namespace vortex::amplitude {

using specfun::bessel_j;

namespace {

constexpr Complex I{0.0, 1.0};

Complex i_pow(int n) {
  static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((n % 4) + 4) % 4];
}

void check_lambda(int lambda_pol) {
  if (lambda_pol < -1 || lambda_pol > 1) {
    throw InvalidQuantumNumbers("lambda_pol must be -1, 0 or +1 (got " +
                                std::to_string(lambda_pol) + ")");
  }
}

// least-squares slope of y against x
double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

//------------------------------------------------------------------------------
AtomicState::AtomicState(int n_, int l_, int m_) : n(n_), l(l_), m(m_) {
  if (n < 1 || n > 10 || l < 0 || l >= n || m > l || m < -l) {
    throw InvalidQuantumNumbers(
        "AtomicState: need 1 <= n <= 10, 0 <= l < n, |m| <= l (got n=" +
        std::to_string(n) + ", l=" + std::to_string(l) +
        ", m=" + std::to_string(m) + ")");
  }
}

double photon_energy_for(int n_f) {
  if (n_f < 2) {
    throw InvalidQuantumNumbers("photon_energy_for: n_f = " +
                                std::to_string(n_f) +
                                " gives no transition from 1s");
  }
  return 0.5 * (1.0 - 1.0 / (double(n_f) * n_f));
}

double photon_energy_for(const AtomicState &final_state) {
  return photon_energy_for(final_state.n);
}

QuadratureSettings QuadratureSettings::refined() const {
  QuadratureSettings s = *this;
  s.angular_nodes *= 2;
  s.panel_order *= 2;
  s.initial_panels *= 2;
  s.max_panels *= 2;
  return s;
}

//------------------------------------------------------------------------------
ReducedIntegral reduced_integral(const AtomicState &final_state,
                                 int lambda_pol, double k_perp, double k_z,
                                 const QuadratureSettings &settings) {
  check_lambda(lambda_pol);
  const int order = final_state.m - lambda_pol;

  // angular table: nodes, sin theta, and w * Y_lm * Y_1lambda
  const quad::GaussLegendre angular(settings.angular_nodes);
  const specfun::SphericalHarmonicSlice y_final(final_state.l, final_state.m);
  const specfun::SphericalHarmonicSlice y_dipole(1, lambda_pol);
  const int na = angular.size();
  std::vector<double> cos_th(na), sin_th(na), weight(na);
  for (int j = 0; j < na; ++j) {
    const double c = angular.nodes()[j];
    cos_th[j] = c;
    sin_th[j] = std::sqrt((1.0 - c) * (1.0 + c));
    weight[j] = angular.weights()[j] * y_final(c) * y_dipole(c);
  }

  const specfun::RadialWavefunction r_final(final_state.n, final_state.l);
  const specfun::RadialWavefunction r_ground(1, 0);

  auto integrand = [&](double r) -> Complex {
    const double radial = r * r * r_final(r) * r_ground(r);
    if (radial == 0.0) {
      return {0.0, 0.0};
    }
    Complex ang{0.0, 0.0};
    for (int j = 0; j < na; ++j) {
      const double bes =
          order == 0 && k_perp == 0.0 ? 1.0
                                      : bessel_j(order, k_perp * r * sin_th[j]);
      const double arg = k_z * r * cos_th[j];
      ang += weight[j] * bes * Complex(std::cos(arg), std::sin(arg));
    }
    return radial * ang;
  };

  const quad::GaussLegendre panel(settings.panel_order);
  quad::AdaptiveOptions opt;
  opt.rel_tol = settings.rel_tol;
  opt.initial_panels = settings.initial_panels;
  opt.max_panels = settings.max_panels;
  const double r_max =
      settings.r_max_per_n2 * double(final_state.n) * final_state.n;

  // Selection-rule suppressed factors are tiny differences of O(1) terms, so
  // the angular sum carries rounding noise of order eps times the integral
  // of |integrand|. Asking for less than that can never converge.
  double weight_l1 = 0.0;
  for (double w : weight) {
    weight_l1 += std::abs(w);
  }
  double radial_l1 = 0.0;
  constexpr int l1_panels = 64;
  for (int i = 0; i < l1_panels; ++i) {
    radial_l1 += panel.integrate(
        [&](double r) { return std::abs(r * r * r_final(r) * r_ground(r)); },
        r_max * i / l1_panels, r_max * (i + 1) / l1_panels);
  }
  opt.abs_tol = 32.0 * std::numeric_limits<double>::epsilon() * weight_l1 *
                radial_l1;
  const auto res = quad::integrate_adaptive(integrand, 0.0, r_max, panel, opt);
  if (!res.converged) {
    throw ConvergenceError("reduced_integral: radial quadrature did not reach "
                           "tolerance within max_panels",
                           res.value, res.error);
  }
  return {res.value, res.error};
}

ReducedFactor g_reduced(const AtomicState &final_state, int lambda_pol,
                        const BeamParams &beam,
                        const QuadratureSettings &settings) {
  const auto r =
      reduced_integral(final_state, lambda_pol, beam.kappa(), beam.k_z(), settings);
  return {r.value, r.quad_error, lambda_pol, final_state, beam};
}

ReducedIntegral g_plane_wave(const AtomicState &final_state, int lambda_pol,
                             double omega, const QuadratureSettings &settings) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("g_plane_wave: omega must be positive");
  }
  return reduced_integral(final_state, lambda_pol, 0.0,
                          constants::wavenumber(omega), settings);
}

//------------------------------------------------------------------------------
ReducedFactor ReducedFactorCache::get(const AtomicState &final_state,
                                      int lambda_pol, const BeamParams &beam) {
  const Key key{final_state.n, final_state.l, final_state.m,
                lambda_pol, beam.omega(), beam.theta_k()};
  {
    std::shared_lock lock(m_mutex);
    if (auto it = m_table.find(key); it != m_table.end()) {
      return {it->second.value, it->second.quad_error, lambda_pol, final_state,
              beam};
    }
  }
  const auto fresh = reduced_integral(final_state, lambda_pol, beam.kappa(),
                                      beam.k_z(), m_settings);
  std::unique_lock lock(m_mutex);
  const auto [it, inserted] = m_table.emplace(key, fresh);
  return {it->second.value, it->second.quad_error, lambda_pol, final_state,
          beam};
}

std::size_t ReducedFactorCache::size() const {
  std::shared_lock lock(m_mutex);
  return m_table.size();
}

//------------------------------------------------------------------------------
Complex helicity_combination(const BeamParams &beam, Complex g_same,
                             Complex g_zero, Complex g_opposite) {
  const double th = beam.theta_k();
  const double cos2 = std::cos(0.5 * th) * std::cos(0.5 * th);
  const double sin2 = std::sin(0.5 * th) * std::sin(0.5 * th);
  return i_pow(-beam.helicity()) *
         (cos2 * g_same + I / std::sqrt(2.0) * std::sin(th) * g_zero -
          sin2 * g_opposite);
}

Complex helicity_combination(const AtomicState &final_state,
                             const BeamParams &beam,
                             const QuadratureSettings &settings) {
  const int lam = beam.helicity();
  return helicity_combination(
      beam, g_reduced(final_state, lam, beam, settings).value,
      g_reduced(final_state, 0, beam, settings).value,
      g_reduced(final_state, -lam, beam, settings).value);
}

Complex helicity_combination(const AtomicState &final_state,
                             const BeamParams &beam,
                             ReducedFactorCache &cache) {
  const int lam = beam.helicity();
  return helicity_combination(beam, cache.get(final_state, lam, beam).value,
                              cache.get(final_state, 0, beam).value,
                              cache.get(final_state, -lam, beam).value);
}

std::vector<Complex> helicity_combinations(int n_f, int l_f,
                                           const BeamParams &beam,
                                           ReducedFactorCache &cache) {
  std::vector<Complex> out;
  out.reserve(2 * l_f + 1);
  for (int m = -l_f; m <= l_f; ++m) {
    out.push_back(helicity_combination(AtomicState(n_f, l_f, m), beam, cache));
  }
  return out;
}

double amplitude_prefactor(const BeamParams &beam) {
  return -std::sqrt(2.0 * constants::pi * beam.kappa() / 3.0);
}

Amplitude amplitude(const AtomicState &final_state, const BeamParams &beam,
                    double b, double phi_b, Complex combination) {
  if (!std::isfinite(b) || b < 0.0) {
    throw DomainError("amplitude: impact parameter must be finite and >= 0");
  }
  const int dm = final_state.m - beam.m_gamma();
  double bessel = 0.0;
  Complex value{0.0, 0.0};
  if (b == 0.0) {
    bessel = dm == 0 ? 1.0 : 0.0;
    if (dm == 0) {
      value = amplitude_prefactor(beam) * combination;
    }
  } else {
    bessel = bessel_j(dm, beam.kappa() * b);
    const double ph = -dm * phi_b;
    value = amplitude_prefactor(beam) *
            Complex(std::cos(ph), std::sin(ph)) * bessel * combination;
  }
  return {value, final_state, beam, b, phi_b, combination, bessel};
}

Amplitude amplitude(const AtomicState &final_state, const BeamParams &beam,
                    double b, double phi_b,
                    const QuadratureSettings &settings) {
  return amplitude(final_state, beam, b, phi_b,
                   helicity_combination(final_state, beam, settings));
}

//------------------------------------------------------------------------------
int expected_omega_exponent(const AtomicState &final_state, int helicity) {
  const int d = std::abs(final_state.m - helicity);
  int p = std::max(0, final_state.l - 1 - d);
  if ((final_state.l + final_state.m + 1 + helicity + p) % 2 != 0) {
    ++p;
  }
  return p + d;
}

ScalingFit selection_scaling_check(const AtomicState &final_state,
                                   const BeamParams &beam,
                                   const QuadratureSettings &settings) {
  const int lam = beam.helicity();
  auto magnitude = [&](double omega, double theta) {
    const BeamParams b(omega, theta, beam.m_gamma(), lam);
    const double v = std::abs(g_reduced(final_state, lam, b, settings).value);
    if (!(v > 1e-300)) {
      throw DegenerateError("selection_scaling_check: |g| below 1e-300");
    }
    return std::log(v);
  };

  std::vector<double> xs, ys;
  for (double theta : {1e-3, 2e-3, 4e-3, 8e-3}) {
    xs.push_back(std::log(std::sin(theta)));
    ys.push_back(magnitude(beam.omega(), theta));
  }
  const double sin_exp = fit_slope(xs, ys);

  xs.clear();
  ys.clear();
  const double lo = 0.1, hi = 0.46875;
  constexpr int samples = 5;
  for (int i = 0; i < samples; ++i) {
    const double omega = lo * std::pow(hi / lo, double(i) / (samples - 1));
    xs.push_back(std::log(omega));
    ys.push_back(magnitude(omega, beam.theta_k()));
  }
  const double omega_exp = fit_slope(xs, ys);

  return {sin_exp, omega_exp, std::abs(final_state.m - lam),
          expected_omega_exponent(final_state, lam)};
}

} // namespace vortex::amplitude
