#include "doctest.h"

#include "vortex/angmom.hpp"
#include "vortex/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace vortex::angmom;
using std::numbers::pi;

TEST_CASE("spin projection") {
  CHECK(spin_projection(BeamParams(0.5, 0.2, 4, 1)) == doctest::Approx(std::cos(0.2)).epsilon(1e-14));
  CHECK(spin_projection(BeamParams(0.5, 0.2, 4, 1)) == doctest::Approx(0.98007).epsilon(1e-5));
  CHECK(spin_projection(BeamParams(0.5, 0.2, 3, -1)) == doctest::Approx(-std::cos(0.2)).epsilon(1e-14));
  CHECK(spin_projection(BeamParams(0.5, 1e-8, 0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(spin_projection(BeamParams(0.5, pi / 2 - 1e-12, 0, 1))) < 1e-11);
}

TEST_CASE("orbital projection") {
  CHECK(orbital_projection(BeamParams(0.5, 0.2, 4, 1)) == doctest::Approx(4 - std::cos(0.2)).epsilon(1e-14));
  CHECK(orbital_projection(BeamParams(0.5, 0.2, 4, 1)) == doctest::Approx(3.01993).epsilon(1e-5));
  CHECK(std::abs(orbital_projection(BeamParams(0.5, 1e-6, 1, 1))) < 1e-11);
  CHECK(std::abs(orbital_projection(BeamParams(0.5, 1e-6, -1, -1))) < 1e-11);
}

TEST_CASE("channel weights converge to their limits") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> th(0.01, pi / 2 - 0.01);
  std::uniform_int_distribution<int> m(-6, 6);
  for (int t = 0; t < 20; ++t) {
    const double theta = th(rng);
    const BeamParams p(0.5, theta, m(rng), t % 2 ? 1 : -1);
    const auto w = channel_weights(p, 1e3);
    CHECK(w.orders[0] == p.m_gamma() - p.helicity());
    CHECK(w.orders[1] == p.m_gamma());
    CHECK(w.orders[2] == p.m_gamma() + p.helicity());
    CHECK(w.limit[0] == doctest::Approx(std::pow(std::cos(theta / 2), 4)));
    CHECK(w.limit[1] == doctest::Approx(0.5 * std::sin(theta) * std::sin(theta)));
    CHECK(w.limit[2] == doctest::Approx(std::pow(std::sin(theta / 2), 4)));
    CHECK(w.limit[0] + w.limit[1] + w.limit[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.max_rel_error < 0.01);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(w.disk[i] / w.limit[i] - 1) < 0.01);
  }
  // convergence improves with the radius
  const BeamParams p(0.5, 0.7, 2, 1);
  CHECK(channel_weights(p, 1e3).max_rel_error < channel_weights(p, 30.0).max_rel_error);
}

TEST_CASE("weight identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0, pi);
  for (int t = 0; t < 1000; ++t) {
    const double x = th(rng);
    CHECK(0.5 * std::sin(x) * std::sin(x) + std::pow(std::cos(x / 2), 4) + std::pow(std::sin(x / 2), 4) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("total projection equals m_gamma for randomized beams") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> th(1e-3, pi / 2 - 1e-3), om(0.05, 2.0);
  std::uniform_int_distribution<int> m(-6, 6);
  for (int t = 0; t < 100; ++t) {
    const BeamParams p(om(rng), th(rng), m(rng), t % 2 ? 1 : -1);
    const auto budget = total_projection(p);
    CHECK(std::abs(budget.total - p.m_gamma()) < 1e-10);
    CHECK(budget.total == doctest::Approx(budget.spin + budget.orbital).epsilon(1e-15));
    CHECK(budget.beam == p);
  }
  const auto b = total_projection(BeamParams(0.5, 0.2, 3, -1));
  CHECK(std::abs(b.total - 3) < 1e-10);
}

TEST_CASE("too small a disk is a convergence error") {
  CHECK_THROWS_AS(orbital_projection(BeamParams(0.5, 0.2, 4, 1), 2.0), vortex::ConvergenceError);
  CHECK_THROWS_AS(total_projection(BeamParams(0.5, 0.2, 4, 1), 2.0), vortex::ConvergenceError);
}
