#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "symexp/constants.hpp"
#include "symexp/errors.hpp"
#include "symexp/oscillator.hpp"
#include "symexp/scattering.hpp"

using namespace symexp;

TEST_CASE("debye-waller") {
  CHECK(debye_waller(0.0) == 1.0);
  CHECK(debye_waller(1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-15));
  for (double eta : {0.05, 0.3, 1.0, 2.5}) {
    const double c0 = kick_matrix_element(0, eta, KickParity::symmetric);
    CHECK(std::abs(debye_waller(eta) - c0 * c0) < 1e-10);
  }
  SUBCASE("x-ray foil at the resolution boundary") {
    // m omega = 1e-14, lambda = 0.1 nm.
    const double m_omega = 1e-14;
    const double k = kTwoPi / 1e-10;
    const double eta = 2.0 * k * std::sqrt(constants().hbar / (2.0 * m_omega));
    CHECK(debye_waller(eta) == doctest::Approx(6.8894869e-37).epsilon(1e-6));
  }
  CHECK_THROWS_AS(debye_waller(-0.1), DomainError);
}

TEST_CASE("excitation probabilities, exact") {
  const auto p0 = excitation_probabilities(0.0, ExpansionMode::exact);
  CHECK(p0.p00 == 1.0);
  CHECK(p0.p_even_total == 1.0);
  CHECK(p0.p_odd_total == 0.0);

  const auto p = excitation_probabilities(0.1, ExpansionMode::exact);
  CHECK(p.p_odd_total == doctest::Approx(0.00990066334662234889).epsilon(1e-14));
  CHECK(p.p_even_total == doctest::Approx(0.99009933665337765).epsilon(1e-14));
  CHECK_FALSE(p.outside_lamb_dicke_limit);

  CHECK_THROWS_AS(excitation_probabilities(-1.0, ExpansionMode::exact), DomainError);

  SUBCASE("bookkeeping against the level sums") {
    for (double eta : {0.01, 0.1, 0.5, 1.0, 2.5}) {
      const auto q = excitation_probabilities(eta, ExpansionMode::exact);
      double even = 0.0, odd = 0.0, even_excited = 0.0;
      for (int n = 0; n <= kDefaultMaxLevel; ++n) {
        const double c = kick_matrix_element(n, eta, KickParity::symmetric);
        const double s = kick_matrix_element(n, eta, KickParity::antisymmetric);
        even += c * c;
        odd += s * s;
        if (n > 0) even_excited += c * c;
      }
      CHECK(std::abs(q.p_even_total - even) < 1e-12);
      CHECK(std::abs(q.p_odd_total - odd) < 1e-12);
      CHECK(std::abs(q.p00 + even_excited + odd - 1.0) < 1e-9);
      CHECK(q.p_even_total + q.p_odd_total == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(q.p00 <= q.p_even_total);
      CHECK(q.p00 == doctest::Approx(debye_waller(eta)).epsilon(1e-15));
    }
  }
}

TEST_CASE("excitation probabilities, lamb-dicke") {
  const auto p = excitation_probabilities(0.1, ExpansionMode::lamb_dicke);
  CHECK(p.p_odd_total == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(p.p_even_total == doctest::Approx(0.99).epsilon(1e-15));
  CHECK(p.p00 <= p.p_even_total);
  CHECK_FALSE(p.outside_lamb_dicke_limit);
  CHECK(excitation_probabilities(0.5, ExpansionMode::lamb_dicke).outside_lamb_dicke_limit);
  CHECK_THROWS_AS(excitation_probabilities(1.0, ExpansionMode::lamb_dicke), DomainError);

  for (int i = 1; i <= 100; ++i) {
    const double eta = 0.3 * i / 100.0;
    const double exact = excitation_probabilities(eta, ExpansionMode::exact).p_odd_total;
    CHECK(std::abs(exact - eta * eta) <= std::pow(eta, 4));
  }
}

TEST_CASE("localized D2 fraction") {
  CHECK(d2_fraction_localized(0.0) == 0.0);
  CHECK(d2_fraction_localized(40.0) == 0.5);
  CHECK(d2_fraction_localized(0.1) == doctest::Approx(0.00990066334662234889).epsilon(1e-14));
  CHECK(d2_fraction_localized(0.5) == doctest::Approx(0.196734670143683288).epsilon(1e-14));
  CHECK(d2_fraction_localized(1.0) == doctest::Approx(0.432332358381693654).epsilon(1e-14));
  CHECK(d2_fraction_localized(2.0) == doctest::Approx(0.499832268686048744).epsilon(1e-14));
  for (double eta : {0.1, 0.5, 1.0, 2.0}) {
    CHECK(std::abs(d2_fraction_localized(eta) - oracle::d2_fraction_by_quadrature(eta)) < 1e-10);
  }
  // Tiny eta keeps full relative precision.
  CHECK(d2_fraction_localized(1e-5) == doctest::Approx(1e-10).epsilon(1e-9));
}

TEST_CASE("ratio R") {
  CHECK_THROWS_AS(ratio_R(0.0, ExpansionMode::exact), DomainError);
  CHECK(ratio_R_or_limit(0.0, ExpansionMode::exact) == 1.0);
  // (1 - e^-1 cosh 1) / ((1 - e^-2) / 2) is exactly one.
  const double by_hand = (1.0 - std::exp(-1.0) * std::cosh(1.0)) / ((1.0 - std::exp(-2.0)) / 2.0);
  CHECK(ratio_R(1.0, ExpansionMode::exact) == doctest::Approx(by_hand).epsilon(1e-14));
  CHECK(ratio_R(1.0, ExpansionMode::exact) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ratio_R(1e-3, ExpansionMode::lamb_dicke) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(ratio_R(1e-2, ExpansionMode::lamb_dicke) == doctest::Approx(1.0).epsilon(1e-3));
  for (int i = 1; i <= 300; ++i) {
    const double eta = 0.01 * i;
    CHECK(ratio_R(eta, ExpansionMode::exact) <= r_bound(eta) * (1.0 + 1e-15));
  }
}

TEST_CASE("R bound") {
  CHECK_THROWS_AS(r_bound(0.0), DomainError);
  CHECK(r_bound_or_limit(0.0) == 1.0);
  CHECK(r_bound(1.0) == doctest::Approx(1.46211715726000976).epsilon(1e-15));
  CHECK(std::abs(r_bound(1e-4) - 1.0) < 1e-7);
  CHECK(std::abs(r_bound(10.0) - 2.0) < 1e-6);
  CHECK(r_bound(3.0) == doctest::Approx(1.99975).epsilon(1e-5));

  double previous = 1.0;
  for (int i = 1; i <= 2000; ++i) {
    const double eta = 5.0 * i / 2000.0;
    const double r = r_bound(eta);
    CHECK(r >= previous);
    CHECK(r > 1.0);
    CHECK(r < 2.0 + 1e-15);
    CHECK(r == doctest::Approx(2.0 / (1.0 + std::exp(-eta * eta))).epsilon(1e-14));
    previous = r;
  }

  SUBCASE("parameter form") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
      const double mass = units::particles_to_kg(std::pow(10.0, 4.0 + 12.0 * u(gen)));
      const double lambda = std::pow(10.0, -10.0 + 4.0 * u(gen));
      const double eta = std::pow(10.0, -1.5 + 1.9 * u(gen));
      const auto kick = KickSpec::reflection(kTwoPi / lambda);
      const double omega = omega_for_lamb_dicke(mass, kick, eta);
      const double from_eta = r_bound(lamb_dicke(FoilOscillator{mass, omega, 0}, kick));
      CHECK(r_bound_from_parameters(mass, omega, lambda) == doctest::Approx(from_eta).epsilon(1e-12));
    }
    CHECK_THROWS_AS(r_bound_from_parameters(0.0, 1.0, 1e-10), DomainError);
  }
}

TEST_CASE("qualitative R") {
  CHECK(r_qualitative(0.1) == r_bound(0.1));
  CHECK(r_qualitative(2.0) == doctest::Approx(0.5 * r_bound(2.0)).epsilon(1e-15));
  CHECK(r_qualitative(0.3) == doctest::Approx(r_bound(0.3)).epsilon(1e-15));
  CHECK(r_qualitative(1.5) == doctest::Approx(0.5 * r_bound(1.5)).epsilon(1e-15));

  double best = 0.0, best_eta = 0.0;
  for (int i = 0; i <= 3000; ++i) {
    const double eta = 0.01 * std::pow(300.0, i / 3000.0);
    const double r = r_qualitative(eta);
    CHECK(std::isfinite(r));
    if (r > best) {
      best = r;
      best_eta = eta;
    }
  }
  CHECK(best_eta >= kQualitativeLowEta);
  CHECK(best_eta <= kQualitativeHighEta);
  MESSAGE("r_qualitative peak at eta = " << best_eta);
}

TEST_CASE("coupling") {
  CHECK_THROWS_AS(ScatterCoupling{1.5}.validate(), ValidationError);
  CHECK_THROWS_AS(ScatterCoupling{-0.1}.validate(), ValidationError);
  CHECK(ScatterCoupling{0.25}.scale(0.4) == doctest::Approx(0.1));
}
