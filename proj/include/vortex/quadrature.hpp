#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

namespace vortex::quad {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
  explicit GaussLegendre(int n);

  int size() const { return int(m_nodes.size()); }
  std::span<const double> nodes() const { return m_nodes; }
  std::span<const double> weights() const { return m_weights; }

  /// Integral of f over [a, b].
  template <class F> auto integrate(F &&f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    using T = std::invoke_result_t<F &, double>;
    T sum{};
    for (std::size_t i = 0; i < m_nodes.size(); ++i) {
      sum += m_weights[i] * f(mid + half * m_nodes[i]);
    }
    return sum * half;
  }

private:
  std::vector<double> m_nodes;
  std::vector<double> m_weights;
};

struct AdaptiveOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int initial_panels = 8;
  int max_panels = 4096;
};

template <class T> struct QuadResult {
  T value{};
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

namespace detail {
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double> &z) { return std::abs(z); }
} // namespace detail

//! Globally adaptive panel quadrature on [a, b].
/*! Each panel is integrated with `rule` and with `rule` on both halves; the
    difference is the panel's error estimate and the halves' sum its value.
    The worst panel is bisected until the summed error drops below
    max(abs_tol, rel_tol * |I|) or max_panels is reached.
*/
template <class F>
auto integrate_adaptive(F &&f, double a, double b, const GaussLegendre &rule,
                        const AdaptiveOptions &opt = {}) {
  using T = std::invoke_result_t<F &, double>;
  struct Panel {
    double lo, hi;
    T value;
    double error;
    bool operator<(const Panel &o) const { return error < o.error; }
  };
  auto make_panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const T whole = rule.integrate(f, lo, hi);
    const T halves = rule.integrate(f, lo, mid) + rule.integrate(f, mid, hi);
    return Panel{lo, hi, halves, detail::magnitude(whole - halves)};
  };

  std::priority_queue<Panel> work;
  const int n0 = std::max(1, opt.initial_panels);
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    work.push(make_panel(lo, hi));
  }

  auto totals = [&] {
    // fixed summation order, independent of heap layout
    auto copy = work;
    std::vector<Panel> panels;
    panels.reserve(copy.size());
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel &x, const Panel &y) { return x.lo < y.lo; });
    QuadResult<T> r;
    for (const auto &p : panels) {
      r.value += p.value;
      r.error += p.error;
    }
    r.panels = int(panels.size());
    return r;
  };

  T running{};
  double err = 0.0;
  {
    auto copy = work;
    while (!copy.empty()) {
      running += copy.top().value;
      err += copy.top().error;
      copy.pop();
    }
  }
  while (true) {
    const double target =
        std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(running));
    if (err <= target) {
      auto r = totals();
      r.converged = true;
      return r;
    }
    if (int(work.size()) >= opt.max_panels) {
      auto r = totals();
      r.converged = false;
      return r;
    }
    const Panel worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = make_panel(worst.lo, mid);
    const Panel right = make_panel(mid, worst.hi);
    running += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
  }
}

} // namespace vortex::quad
