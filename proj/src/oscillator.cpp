#include "symexp/oscillator.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "symexp/constants.hpp"
#include "symexp/errors.hpp"

namespace symexp {

namespace {

// Psi_0 * Psi_n is below 1e-30 outside |xi| < 12 for every n <= 200.
constexpr double kIntegrationHalfWidth = 12.0;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

FoilOscillator FoilOscillator::from_particles(double particle_count, double omega) {
  return FoilOscillator{units::particles_to_kg(particle_count), omega, 0};
}

void FoilOscillator::validate() const {
  require_positive(mass, "foil mass");
  require_positive(omega, "foil angular frequency");
  if (level < 0) throw DomainError("foil level must be non-negative");
}

double FoilOscillator::ground_rms() const {
  validate();
  return std::sqrt(constants().hbar / (2.0 * mass * omega));
}

double FoilOscillator::width(int n) const {
  validate();
  if (n < 0) throw DomainError("level must be non-negative");
  return std::sqrt(constants().hbar * (n + 0.5) / (0.5 * mass * omega));
}

double FoilOscillator::inverse_length() const {
  validate();
  return std::sqrt(mass * omega / constants().hbar);
}

double FoilOscillator::period() const {
  validate();
  return kTwoPi / omega;
}

double FoilOscillator::particle_count() const { return units::kg_to_particles(mass); }

KickSpec KickSpec::reflection(double wavenumber, KickParity parity) {
  if (!(wavenumber >= 0.0)) throw DomainError("wavenumber must be non-negative");
  return KickSpec{2.0 * wavenumber, parity};
}

double lamb_dicke(const FoilOscillator& foil, const KickSpec& kick) {
  if (!(kick.k_transfer >= 0.0)) throw DomainError("k_transfer must be non-negative");
  return kick.k_transfer * foil.ground_rms();
}

double omega_for_lamb_dicke(double mass, const KickSpec& kick, double eta) {
  require_positive(mass, "foil mass");
  require_positive(eta, "Lamb-Dicke parameter");
  require_positive(kick.k_transfer, "k_transfer");
  return kick.k_transfer * kick.k_transfer * constants().hbar / (2.0 * mass * eta * eta);
}

double ground_density(const FoilOscillator& foil, double x) {
  if (foil.level != 0) {
    throw DomainError("ground_density: only the ground state (level 0) is supported, got level " +
                      std::to_string(foil.level));
  }
  const double a = foil.inverse_length();
  return a / std::sqrt(kPi) * std::exp(-a * a * x * x);
}

double log_kick_magnitude(int n, double eta) {
  if (n < 0) throw DomainError("level must be non-negative");
  if (!(eta >= 0.0)) throw DomainError("eta must be non-negative");
  if (n == 0) return -0.5 * eta * eta;
  if (eta == 0.0) return -std::numeric_limits<double>::infinity();
  return -0.5 * eta * eta + n * std::log(eta) - 0.5 * std::lgamma(n + 1.0);
}

double kick_matrix_element(int n, double eta, KickParity parity) {
  if (n < 0) throw DomainError("level must be non-negative");
  if (!(eta >= 0.0)) throw DomainError("eta must be non-negative");
  const bool even = n % 2 == 0;
  if (parity == KickParity::symmetric && !even) return 0.0;
  if (parity == KickParity::antisymmetric && even) return 0.0;
  const double magnitude = std::exp(log_kick_magnitude(n, eta));
  // cos picks Re(i^n) = (-1)^(n/2); sin picks Im(i^n) = (-1)^((n-1)/2).
  const int quarter_turns = even ? n / 2 : (n - 1) / 2;
  return quarter_turns % 2 == 0 ? magnitude : -magnitude;
}

double hermite_function(int n, double xi) {
  if (n < 0) throw DomainError("hermite_function: negative order");
  double prev = 0.0;
  double cur = std::exp(-0.5 * xi * xi) / std::pow(kPi, 0.25);
  for (int j = 0; j < n; ++j) {
    const double next = std::sqrt(2.0 / (j + 1.0)) * xi * cur - std::sqrt(j / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureResult kick_matrix_element_numeric(int n, const FoilOscillator& foil, const KickSpec& kick,
                                             int max_level) {
  if (n < 0 || n > max_level) {
    throw DomainError("kick_matrix_element_numeric: level " + std::to_string(n) + " outside [0, " +
                      std::to_string(max_level) + "]");
  }
  if (foil.level != 0) throw DomainError("kick_matrix_element_numeric: initial state must be the ground state");
  // In xi = a x the kick argument is k_transfer x = sqrt(2) eta xi.
  const double scaled = std::sqrt(2.0) * lamb_dicke(foil, kick);
  const bool symmetric = kick.parity == KickParity::symmetric;
  auto integrand = [&](double xi) {
    const double phase = scaled * xi;
    const double kick_value = symmetric ? std::cos(phase) : std::sin(phase);
    return hermite_function(n, xi) * kick_value * hermite_function(0, xi);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, -kIntegrationHalfWidth, kIntegrationHalfWidth, 20, 1e-13, &error);
  if (!(error <= kQuadratureTolerance)) {
    throw QuadratureError("kick_matrix_element_numeric: error estimate " + std::to_string(error) +
                              " exceeds tolerance at n = " + std::to_string(n),
                          error);
  }
  return QuadratureResult{value, error};
}

double sample_position(const FoilOscillator& foil, Rng& rng) {
  if (foil.level != 0) throw DomainError("sample_position: only the ground state is supported");
  std::normal_distribution<double> gauss(0.0, foil.ground_rms());
  return gauss(rng);
}

}  // namespace symexp
