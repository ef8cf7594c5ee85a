#pragma once

/**
 * @file   scattering.hpp
 * @brief  Closed-form photon-foil scattering probabilities and signal/noise ratios.
 *
 * All results are relative probabilities per scattered photon. The absolute
 * scale (polarisability, field normalisation, total scattering probability)
 * is a single efficiency factor that never enters a ratio.
 */

namespace symexp {

struct ScatterCoupling {
  double efficiency = 1.0;  ///< in [0, 1]

  void validate() const;
  double scale(double relative_probability) const { return efficiency * relative_probability; }
};

enum class ExpansionMode { exact, lamb_dicke };

struct ScatterProbabilities {
  double eta = 0.0;
  double p00 = 0.0;           ///< foil stays in the ground state
  double p_even_total = 0.0;  ///< photon stays symmetric (n = 0, 2, 4, ...)
  double p_odd_total = 0.0;   ///< photon flips to antisymmetric (n = 1, 3, ...)
  /// Set in lamb_dicke mode when eta > 0.3, where the second-order expansion is unreliable.
  bool outside_lamb_dicke_limit = false;
};

inline constexpr double kLambDickeWarnEta = 0.3;

/// P(0 -> 0) = exp(-eta^2).
double debye_waller(double eta);

/// Exact mode sums the exact kick amplitudes: p_even = e^{-eta^2} cosh(eta^2),
/// p_odd = e^{-eta^2} sinh(eta^2). Lamb-Dicke mode keeps terms to eta^2:
/// p00 = p_even = 1 - eta^2, p_odd = eta^2; it rejects eta >= 1 where those leave [0, 1].
ScatterProbabilities excitation_probabilities(double eta, ExpansionMode mode);

/// I2 / (I1 + I2) averaged over the ground density: (1 - exp(-2 eta^2)) / 2.
double d2_fraction_localized(double eta);

/// R = (1 - p_even_total) / d2_fraction_localized. Throws DomainError at eta <= 0.
double ratio_R(double eta, ExpansionMode mode);
/// ratio_R with the analytic limit 1 at eta = 0.
double ratio_R_or_limit(double eta, ExpansionMode mode);

/// R_bound = (1 - exp(-eta^2)) / d2_fraction_localized. Throws DomainError at eta <= 0.
double r_bound(double eta);
/// r_bound with the analytic limit 1 at eta = 0.
double r_bound_or_limit(double eta);
/// R_bound written with a = sqrt(m omega / hbar) and b = 8 pi / lambda:
/// 2 (1 - exp(-8 pi^2 / (lambda a)^2)) / (1 - exp(-16 pi^2 / (lambda a)^2)).
double r_bound_from_parameters(double mass, double omega, double wavelength);

inline constexpr double kQualitativeLowEta = 0.3;
inline constexpr double kQualitativeHighEta = 1.5;

/// Qualitative R curve: R_bound below eta = 0.3, R_bound / 2 above eta = 1.5,
/// and R_bound times a weight falling from 1 to 1/2 as a C1 cubic
/// (smoothstep) in log eta in between.
double r_qualitative(double eta);

}  // namespace symexp
