#include "vortex/beam.hpp"

#include "vortex/constants.hpp"
#include "vortex/errors.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <string>

namespace vortex::beam {

using specfun::bessel_j;

namespace {

constexpr Complex I{0.0, 1.0};

Complex i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

Vec4c axpy(Complex a, const Vec4c &x, const Vec4c &y) {
  Vec4c out;
  for (int i = 0; i < 4; ++i) {
    out[i] = a * x[i] + y[i];
  }
  return out;
}

// The mode evaluated at transverse polar position (rho, phi).
Vec4c mode_at(const BeamParams &p, double rho, double phi, double z,
              double t) {
  const int m = p.m_gamma();
  const int lam = p.helicity();
  const double th = p.theta_k();
  const double cos2 = std::cos(0.5 * th) * std::cos(0.5 * th);
  const double sin2 = std::sin(0.5 * th) * std::sin(0.5 * th);
  const double kr = p.kappa() * rho;

  const Complex c0 = lam / std::sqrt(2.0) * std::sin(th) * phase(m * phi) *
                     bessel_j(m, kr);
  const Complex cp = i_pow(-lam) * cos2 * phase((m - lam) * phi) *
                     bessel_j(m - lam, kr);
  const Complex cm = i_pow(lam) * sin2 * phase((m + lam) * phi) *
                     bessel_j(m + lam, kr);

  const Complex overall = std::sqrt(p.kappa() / (2.0 * constants::pi)) *
                          phase(p.k_z() * z - p.omega() * t);

  Vec4c out{};
  out = axpy(overall * c0, PolarizationBasis::eta(0), out);
  out = axpy(overall * cp, PolarizationBasis::eta(lam), out);
  out = axpy(overall * cm, PolarizationBasis::eta(-lam), out);
  return out;
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

} // namespace

//------------------------------------------------------------------------------
BeamParams::BeamParams(double omega, double theta_k, int m_gamma, int helicity)
    : m_omega(omega), m_theta_k(theta_k), m_m_gamma(m_gamma),
      m_helicity(helicity) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("BeamParams: omega must be positive and finite");
  }
  if (!std::isfinite(theta_k) || theta_k <= 0.0 ||
      theta_k >= 0.5 * constants::pi) {
    throw DomainError("BeamParams: need 0 < theta_k < pi/2");
  }
  if (helicity != 1 && helicity != -1) {
    throw InvalidQuantumNumbers("BeamParams: helicity must be +1 or -1 (got " +
                                std::to_string(helicity) + ")");
  }
  if (m_gamma > 60 || m_gamma < -60) {
    throw InvalidQuantumNumbers("BeamParams: |m_gamma| must be <= 60");
  }
  m_k = constants::wavenumber(omega);
  m_kappa = m_k * std::sin(theta_k);
  m_k_z = m_k * std::cos(theta_k);
}

BeamParams BeamParams::from_wavelength_nm(double wavelength_nm, double theta_k,
                                          int m_gamma, int helicity) {
  if (!std::isfinite(wavelength_nm) || wavelength_nm <= 0.0) {
    throw DomainError("BeamParams: wavelength must be positive and finite");
  }
  return BeamParams(constants::omega_from_wavelength_nm(wavelength_nm),
                    theta_k, m_gamma, helicity);
}

double BeamParams::wavelength() const { return 2.0 * constants::pi / m_k; }

double BeamParams::wavelength_nm() const {
  return constants::wavelength_nm(m_omega);
}

SpaceTimePoint SpaceTimePoint::cylindrical(double rho, double phi, double z,
                                           double t) {
  return {t, rho * std::cos(phi), rho * std::sin(phi), z};
}

double SpaceTimePoint::rho() const { return std::hypot(x, y); }
double SpaceTimePoint::phi() const { return std::atan2(y, x); }

Vec4c PolarizationBasis::eta(int lambda) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (lambda) {
  case 1:
    return {0.0, -r, Complex(0.0, -r), 0.0};
  case -1:
    return {0.0, r, Complex(0.0, -r), 0.0};
  case 0:
    return {0.0, 0.0, 0.0, 1.0};
  default:
    throw InvalidQuantumNumbers("eta: lambda must be -1, 0 or +1");
  }
}

//------------------------------------------------------------------------------
Vec4c polarization_vector(const BeamParams &p, double phi_k) {
  const int lam = p.helicity();
  const double th = p.theta_k();
  const double cos2 = std::cos(0.5 * th) * std::cos(0.5 * th);
  const double sin2 = std::sin(0.5 * th) * std::sin(0.5 * th);
  Vec4c out{};
  out = axpy(phase(-lam * phi_k) * cos2, PolarizationBasis::eta(lam), out);
  out = axpy(phase(lam * phi_k) * sin2, PolarizationBasis::eta(-lam), out);
  out = axpy(lam / std::sqrt(2.0) * std::sin(th), PolarizationBasis::eta(0),
             out);
  return out;
}

Vec4c vector_potential(const BeamParams &p, const SpaceTimePoint &x) {
  return mode_at(p, x.rho(), x.phi(), x.z, x.t);
}

Vec4c translate(const BeamParams &p, std::array<double, 2> b,
                const SpaceTimePoint &x) {
  const double dx = x.x - b[0];
  const double dy = x.y - b[1];
  return mode_at(p, std::hypot(dx, dy), std::atan2(dy, dx), x.z, x.t);
}

template <class T>
std::array<T, 3> to_cylindrical(const std::array<T, 3> &v, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c * v[0] + s * v[1], -s * v[0] + c * v[1], v[2]};
}

template Vec3 to_cylindrical(const Vec3 &, double);
template Vec3c to_cylindrical(const Vec3c &, double);

FieldSample fields(const BeamParams &p, const SpaceTimePoint &x) {
  FieldSample out;
  out.rho = x.rho();
  out.phi = x.phi();
  out.z = x.z;
  out.t = x.t;

  const double k = p.wavenumber();
  const int lam = p.helicity();
  if (lam == 1) {
    const int m = p.m_gamma();
    const double th = p.theta_k();
    const double cos2 = std::cos(0.5 * th) * std::cos(0.5 * th);
    const double sin2 = std::sin(0.5 * th) * std::sin(0.5 * th);
    const double kr = p.kappa() * out.rho;
    const double j_up = bessel_j(m + 1, kr);
    const double j_dn = bessel_j(m - 1, kr);
    const Complex pre =
        k * std::sqrt(p.kappa() / (4.0 * constants::pi)) *
        phase(p.k_z() * x.z - p.omega() * x.t + m * out.phi);
    out.B = {I * pre * (sin2 * j_up + cos2 * j_dn),
             pre * (sin2 * j_up - cos2 * j_dn),
             pre * std::sin(th) * bessel_j(m, kr)};
  } else {
    const Vec4c a = vector_potential(p, x);
    const Vec3c cart{-k * a[1], -k * a[2], -k * a[3]};
    out.B = to_cylindrical(cart, out.phi);
  }
  for (int i = 0; i < 3; ++i) {
    out.E[i] = I * double(lam) * out.B[i];
  }
  const Vec3 re_e{out.E[0].real(), out.E[1].real(), out.E[2].real()};
  const Vec3 re_b{out.B[0].real(), out.B[1].real(), out.B[2].real()};
  out.S = cross(re_e, re_b);
  return out;
}

} // namespace vortex::beam
