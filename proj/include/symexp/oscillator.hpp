#pragma once

/**
 * @file   oscillator.hpp
 * @brief  Centre-of-mass harmonic oscillator of the mirror foil.
 *
 * The foil is a one-dimensional quantum oscillator of mass m and angular
 * frequency omega. A photon reflected from both faces transfers momentum
 * hbar * k_transfer and acts on the foil through the kick operators
 *   K+ = cos(k_transfer x),   K- = sin(k_transfer x)   (up to phase).
 * With x = sqrt(hbar / 2 m omega) (a + a^dagger) the kick matrix elements
 * out of the ground state have the closed form
 *   <n| exp(i eta (a + a^dagger)) |0> = exp(-eta^2/2) (i eta)^n / sqrt(n!),
 * where eta = k_transfer sqrt(hbar / 2 m omega) is the Lamb-Dicke parameter.
 */

#include <cstddef>

#include "symexp/random.hpp"

namespace symexp {

struct FoilOscillator {
  double mass = 0.0;   ///< kg
  double omega = 0.0;  ///< rad/s
  int level = 0;       ///< occupied level n

  static FoilOscillator from_particles(double particle_count, double omega);

  /// Throws DomainError unless mass > 0, omega > 0, level >= 0.
  void validate() const;

  /// sqrt(<x^2>_0) = sqrt(hbar / (2 m omega)).
  double ground_rms() const;
  /// W(n) = sqrt(hbar (n + 1/2) / (m omega / 2)); W(0) = sqrt(2) * ground_rms().
  double width(int n) const;
  double width() const { return width(level); }
  /// a = sqrt(m omega / hbar); the ground density is (a/sqrt(pi)) exp(-a^2 x^2).
  double inverse_length() const;
  double period() const;
  double particle_count() const;
};

enum class KickParity { symmetric, antisymmetric };

struct KickSpec {
  double k_transfer = 0.0;  ///< 1/m
  KickParity parity = KickParity::symmetric;

  /// Elastic two-sided reflection of a photon with wavenumber k: k_transfer = 2k.
  static KickSpec reflection(double wavenumber, KickParity parity = KickParity::symmetric);
};

/// eta = k_transfer * sqrt(hbar / (2 m omega)).
double lamb_dicke(const FoilOscillator& foil, const KickSpec& kick);

/// Oscillator angular frequency that yields the requested eta for a given mass and kick.
double omega_for_lamb_dicke(double mass, const KickSpec& kick, double eta);

/// |Psi_0(x)|^2. Only the ground state is supported.
double ground_density(const FoilOscillator& foil, double x);

/// Signed real amplitude <n|cos(eta X)|0> (symmetric) or <n|sin(eta X)|0>
/// (antisymmetric), X = a + a^dagger. Exactly zero when n has the wrong parity.
double kick_matrix_element(int n, double eta, KickParity parity);

/// log |<n|exp(i eta X)|0>|; -infinity when the amplitude vanishes.
double log_kick_magnitude(int n, double eta);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

inline constexpr int kDefaultMaxLevel = 200;
inline constexpr double kQuadratureTolerance = 1e-9;

/// Same amplitude as kick_matrix_element, computed by adaptive Gauss-Kronrod
/// quadrature of Psi_n(x) {cos|sin}(k_transfer x) Psi_0(x) with Hermite
/// functions from the normalised three-term recurrence.
/// Throws QuadratureError if the error estimate exceeds 1e-9.
QuadratureResult kick_matrix_element_numeric(int n, const FoilOscillator& foil, const KickSpec& kick,
                                             int max_level = kDefaultMaxLevel);

/// Normalised Hermite function psi_n(xi) in the dimensionless coordinate xi = a x.
double hermite_function(int n, double xi);

/// Gaussian draw from the ground density: mean 0, variance hbar / (2 m omega).
double sample_position(const FoilOscillator& foil, Rng& rng);

}  // namespace symexp
