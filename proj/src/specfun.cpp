#include "vortex/specfun.hpp"

#include "vortex/constants.hpp"
#include "vortex/errors.hpp"

#include <cmath>
#include <string>

namespace vortex::specfun {

namespace {

constexpr int kMaxBesselOrder = 64;

// sum_k (-1)^k (x/2)^{2k+n} / (k! (n+k)!)
double bessel_series(int n, double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= half / k;
  }
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * double(n + k));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

double bessel_miller(int n, double x) {
  const double big = std::max(double(n), x);
  int start = int(big) + 20 + int(std::sqrt(60.0 * big));
  start += start % 2;

  constexpr double rescale_at = 1e250;
  double j_next = 0.0; // J_{k+1}
  double j_here = 1e-300; // J_k, arbitrary seed
  double wanted = 0.0;
  double even_sum = 0.0;
  for (int k = start; k > 0; --k) {
    const double j_prev = 2.0 * k / x * j_here - j_next;
    j_next = j_here;
    j_here = j_prev; // now J_{k-1}
    if (std::abs(j_here) > rescale_at) {
      j_here /= rescale_at;
      j_next /= rescale_at;
      wanted /= rescale_at;
      even_sum /= rescale_at;
    }
    if (k - 1 == n) {
      wanted = j_here;
    }
    if ((k - 1) % 2 == 0 && k - 1 > 0) {
      even_sum += j_here;
    }
  }
  // j_here is now the unnormalised J_0
  const double norm = j_here + 2.0 * even_sum;
  return wanted / norm;
}

// Hankel's asymptotic expansion, adequate when x >> n^2.
double bessel_hankel(int n, double x) {
  const double mu = 4.0 * double(n) * double(n);
  const double chi = x - (0.5 * n + 0.25) * constants::pi;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > std::abs(last)) {
      break;
    }
    last = term;
    if (k % 2 == 1) {
      q += (k % 4 == 1 ? 1.0 : -1.0) * term;
    } else {
      p += (k % 4 == 2 ? -1.0 : 1.0) * term;
    }
    if (std::abs(term) < 1e-17) {
      break;
    }
  }
  return std::sqrt(2.0 / (constants::pi * x)) *
         (p * std::cos(chi) - q * std::sin(chi));
}

// J_0 and J_1 from the asymptotic series, then upward recurrence, which is
// stable while n stays below x. Much cheaper than Miller for large x.
double bessel_upward(int n, double x) {
  double prev = bessel_hankel(0, x);
  if (n == 0) {
    return prev;
  }
  double here = bessel_hankel(1, x);
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * k / x * here - prev;
    prev = here;
    here = next;
  }
  return here;
}

double bessel_nonneg(int n, double x) {
  if (x == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (x * x < 4.0 * (n + 1)) {
    return bessel_series(n, x);
  }
  if (x > 2e4 && x > 10.0 * n * n) {
    return bessel_hankel(n, x);
  }
  if (x >= 30.0 && n < 0.5 * x) {
    return bessel_upward(n, x);
  }
  return bessel_miller(n, x);
}

} // namespace

double bessel_j(int order, double x) {
  if (!std::isfinite(x)) {
    throw DomainError("bessel_j: non-finite argument");
  }
  if (order > kMaxBesselOrder || order < -kMaxBesselOrder) {
    throw DomainError("bessel_j: |order| > 64 (got " + std::to_string(order) +
                      ")");
  }
  int n = order;
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n % 2 == 1) {
      sign = -sign;
    }
  }
  if (x < 0.0) {
    x = -x;
    if (n % 2 == 1) {
      sign = -sign;
    }
  }
  return sign * bessel_nonneg(n, x);
}

//------------------------------------------------------------------------------
RadialWavefunction::RadialWavefunction(int n, int l) : m_n(n), m_l(l) {
  if (n < 1 || n > 10 || l < 0 || l >= n) {
    throw InvalidQuantumNumbers("radial: need 1 <= n <= 10 and 0 <= l < n (got n=" +
                                std::to_string(n) + ", l=" + std::to_string(l) +
                                ")");
  }
  // L^{a}_{p}(x) = sum_j (-1)^j C(p+a, p-j) x^j / j!
  const int p = n - l - 1;
  const int a = 2 * l + 1;
  m_laguerre.resize(p + 1);
  for (int j = 0; j <= p; ++j) {
    // C(p+a, p-j) / j!
    double c = 1.0;
    for (int i = 1; i <= p - j; ++i) {
      c *= double(a + j + i) / i;
    }
    for (int i = 1; i <= j; ++i) {
      c /= i;
    }
    m_laguerre[j] = (j % 2 == 0 ? c : -c);
  }
  // sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!))
  double ratio = 1.0; // (n-l-1)! / (n+l)!
  for (int i = n - l; i <= n + l; ++i) {
    ratio /= i;
  }
  const double two_over_n = 2.0 / n;
  m_norm = std::sqrt(two_over_n * two_over_n * two_over_n * ratio / (2.0 * n));
}

double RadialWavefunction::operator()(double r) const {
  const double x = 2.0 * r / m_n;
  double poly = 0.0;
  for (auto it = m_laguerre.rbegin(); it != m_laguerre.rend(); ++it) {
    poly = poly * x + *it;
  }
  return m_norm * std::exp(-0.5 * x) * std::pow(x, m_l) * poly;
}

double radial(int n, int l, double r) {
  if (!std::isfinite(r)) {
    throw DomainError("radial: non-finite radius");
  }
  return RadialWavefunction(n, l)(r);
}

double radial_derivative_10(double r) {
  if (!std::isfinite(r)) {
    throw DomainError("radial_derivative_10: non-finite radius");
  }
  return -2.0 * std::exp(-r);
}

//------------------------------------------------------------------------------
SphericalHarmonicSlice::SphericalHarmonicSlice(int l, int m) : m_l(l), m_m(m) {
  if (l < 0 || l > 10 || m > l || m < -l) {
    throw InvalidQuantumNumbers("ylm: need |m| <= l <= 10 (got l=" +
                                std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
  }
}

double SphericalHarmonicSlice::operator()(double c) const {
  const int am = std::abs(m_m);
  const double s = std::sqrt(std::max(0.0, (1.0 - c) * (1.0 + c)));

  // Normalised P̄_l^m with the Condon-Shortley phase, so that
  // Y_lm(theta, 0) = P̄_l^m(cos theta) directly.
  double pmm = std::sqrt(1.0 / (4.0 * constants::pi));
  for (int k = 1; k <= am; ++k) {
    pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
  }
  double value = pmm;
  if (m_l > am) {
    double p_prev = pmm;
    double p_here = std::sqrt(2.0 * am + 3.0) * c * pmm;
    for (int ll = am + 2; ll <= m_l; ++ll) {
      const double a = std::sqrt((4.0 * ll * ll - 1.0) /
                                 (double(ll * ll) - double(am * am)));
      const double b = std::sqrt((double((ll - 1) * (ll - 1)) - double(am * am)) /
                                 (4.0 * (ll - 1) * (ll - 1) - 1.0));
      const double p_next = a * (c * p_here - b * p_prev);
      p_prev = p_here;
      p_here = p_next;
    }
    value = p_here;
  }
  if (m_m < 0 && am % 2 == 1) {
    value = -value;
  }
  return value;
}

double ylm_phi0(int l, int m, double cos_theta) {
  if (!std::isfinite(cos_theta) || cos_theta < -1.0 || cos_theta > 1.0) {
    throw DomainError("ylm_phi0: cos(theta) outside [-1, 1]");
  }
  return SphericalHarmonicSlice(l, m)(cos_theta);
}

} // namespace vortex::specfun
