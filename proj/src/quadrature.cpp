#include "vortex/quadrature.hpp"

#include "vortex/constants.hpp"
#include "vortex/errors.hpp"

namespace vortex::quad {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

} // namespace

GaussLegendre::GaussLegendre(int n) : m_nodes(n), m_weights(n) {
  if (n < 1) {
    throw DomainError("GaussLegendre: need at least one node");
  }
  if (n == 1) {
    m_nodes[0] = 0.0;
    m_weights[0] = 2.0;
    return;
  }
  // nodes are symmetric, so only half are solved for
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pn1] = legendre_pair(n, x);
      const double dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const auto [pn, pn1] = legendre_pair(n, x);
    const double dp = n * (x * pn - pn1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    m_nodes[i] = -x;
    m_nodes[n - 1 - i] = x;
    m_weights[i] = w;
    m_weights[n - 1 - i] = w;
  }
}

} // namespace vortex::quad
