#include <doctest.h>

#include <cmath>
#include <random>

#include "ncbound/algebra.hpp"
#include "ncbound/constants.hpp"

using namespace ncbound::algebra;

TEST_CASE("canonical commutators at epsilon = 0") {
  const auto t = commutator_table({1.0, 1.0, 0.0});
  CHECK(t.x1_p1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.x2_p2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.x1_p2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t.x2_p1 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t.x1_x2 == 0.0);
  CHECK(t.p1_p2 == 0.0);
}

TEST_CASE("modified table for unequal masses") {
  const auto t = commutator_table({1.0, 2.0, 0.3});
  CHECK(t.x1_p1 == doctest::Approx(1.0 - 2.0 / 3.0 * 0.3).epsilon(1e-14));
  CHECK(t.x2_p2 == doctest::Approx(1.0 - 1.0 / 3.0 * 0.3).epsilon(1e-14));
  CHECK(t.x1_p2 == doctest::Approx(2.0 / 3.0 * 0.3).epsilon(1e-14));
  CHECK(t.x2_p1 == doctest::Approx(1.0 / 3.0 * 0.3).epsilon(1e-14));
}

TEST_CASE("table matches the closed forms over a parameter grid") {
  for (double m1 : {0.3, 1.0, 2.5, 7.0, 12.0}) {
    for (double m2 : {0.5, 1.0, 3.0, 6.0, 20.0}) {
      for (double eps : {0.0, 0.2, 0.45, 0.7, 0.95}) {
        const double M = m1 + m2;
        const auto t = commutator_table({m1, m2, eps});
        CHECK(std::abs(t.x1_p1 - (1.0 - m2 / M * eps)) < 1e-13);
        CHECK(std::abs(t.x2_p2 - (1.0 - m1 / M * eps)) < 1e-13);
        CHECK(std::abs(t.x1_p2 - m2 / M * eps) < 1e-13);
        CHECK(std::abs(t.x2_p1 - m1 / M * eps) < 1e-13);
        CHECK(t.x1_x2 == 0.0);
        CHECK(t.p1_p2 == 0.0);
        // total-momentum closure: [x_j, p_1 + p_2] = i*hbar
        CHECK(std::abs(t.x1_p1 + t.x1_p2 - 1.0) < 1e-14);
        CHECK(std::abs(t.x2_p1 + t.x2_p2 - 1.0) < 1e-14);
      }
    }
  }
}

TEST_CASE("mass permutation swaps the cross commutators") {
  const auto t = commutator_table({1.5, 4.0, 0.4});
  const auto swapped = commutator_table({4.0, 1.5, 0.4});
  CHECK(t.x1_p2 == doctest::Approx(swapped.x2_p1).epsilon(1e-14));
  CHECK(t.x2_p1 == doctest::Approx(swapped.x1_p2).epsilon(1e-14));
}

TEST_CASE("gaussoid kernel limits and fixed value") {
  CHECK(epsilon_kernel(0.0, 1.0, 0.5) == 0.0);
  CHECK(epsilon_kernel(1e30, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  const double f2 = 16.0 / ncbound::kOmegaCritical;
  CHECK(epsilon_kernel(f2, 1.0, ncbound::kOmegaCritical) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("kinetic coefficients: Schroedinger limit and N = 2 hand expansion") {
  const std::vector<double> masses{1.0, 1.0};
  const auto zero = kinetic_coefficients(masses, EpsilonMatrix(2));
  CHECK(zero.A(0) == 1.0);
  CHECK(zero.A(1) == 1.0);
  CHECK(zero.B(0, 1) == 0.0);

  const double e = 0.4;
  const auto kc = kinetic_coefficients(masses, EpsilonMatrix::uniform(2, e));
  CHECK(kc.A(0) == doctest::Approx(1.0 - e + e * e / 2.0).epsilon(1e-15));
  CHECK(kc.A(1) == doctest::Approx(kc.A(0)).epsilon(1e-15));
  CHECK(kc.B(0, 1) == doctest::Approx(2.0 * e - e * e).epsilon(1e-15));
}

TEST_CASE("kinetic coefficients: permutation symmetry for identical particles") {
  const std::vector<double> masses{2.0, 2.0, 2.0};
  const auto kc = kinetic_coefficients(masses, EpsilonMatrix::uniform(3, 0.3));
  CHECK(kc.A(0) == doctest::Approx(kc.A(1)).epsilon(1e-15));
  CHECK(kc.A(1) == doctest::Approx(kc.A(2)).epsilon(1e-15));
  CHECK(kc.B(0, 1) == doctest::Approx(kc.B(0, 2)).epsilon(1e-15));
  CHECK(kc.B(0, 2) == doctest::Approx(kc.B(1, 2)).epsilon(1e-15));
}

TEST_CASE("center-of-mass separation: two identical masses") {
  const double m = 1.7, e = 0.35;
  const auto sep = com_separation_check({m, m}, EpsilonMatrix::uniform(2, e));
  CHECK(sep.max_offblock < 1e-14);
  CHECK(sep.com_coefficient == doctest::Approx(1.0 / (2.0 * m)).epsilon(1e-14));
  CHECK(sep.relative_block(0, 0) == doctest::Approx((1.0 - e) * (1.0 - e) / m).epsilon(1e-13));
}

TEST_CASE("center-of-mass separation: random masses and epsilon matrices") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> mass_dist(0.2, 5.0);
  std::uniform_real_distribution<double> eps_dist(0.0, 0.95);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<double> masses(n);
    for (auto& m : masses) m = mass_dist(rng);
    EpsilonMatrix eps(n);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) eps.set(j, k, eps_dist(rng));
    double M = 0.0;
    for (double m : masses) M += m;

    const auto sep = com_separation_check(masses, eps);
    CHECK(sep.max_offblock < 1e-12);
    CHECK(sep.com_coefficient == doctest::Approx(1.0 / M).epsilon(1e-12));
  }
}

TEST_CASE("epsilon = 0 separation is the standard Jacobi reduction") {
  const auto sep = com_separation_check({1.0, 2.0, 3.0}, EpsilonMatrix(3));
  CHECK(sep.max_offblock < 1e-14);
  CHECK(sep.com_coefficient == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("kinetic energy never exceeds the Schroedinger form") {
  CHECK(kinetic_energy_bound_check({1.0, 1.0}, EpsilonMatrix::uniform(2, 0.5)));
  CHECK(kinetic_energy_bound_check({1.0, 1.0, 1.0, 1.0}, EpsilonMatrix::uniform(4, 0.2)));
  CHECK(kinetic_energy_bound_check({1.0, 1.0}, EpsilonMatrix(2)));  // equality at eps = 0
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(commutator_table({0.0, 1.0, 0.1}), std::domain_error);
  CHECK_THROWS_AS(commutator_table({1.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(EpsilonMatrix(1), std::domain_error);
  EpsilonMatrix eps(2);
  CHECK_THROWS_AS(eps.set(0, 0, 0.1), std::domain_error);
  CHECK_THROWS_AS(eps.set(0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(kinetic_coefficients({1.0, 1.0, 1.0}, EpsilonMatrix(2)), std::invalid_argument);
}
