#include "symexp/scattering.hpp"

#include <cmath>
#include <string>

#include "symexp/constants.hpp"
#include "symexp/errors.hpp"

namespace symexp {

namespace {

void require_eta(double eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw DomainError("eta must be finite and non-negative, got " + std::to_string(eta));
  }
}

void require_positive_eta(double eta, const char* op) {
  require_eta(eta);
  if (eta == 0.0) throw DomainError(std::string(op) + ": 0/0 at eta = 0, use the limit-aware variant");
}

// 1 - exp(-2 eta^2), accurate for small eta.
double one_minus_exp_2eta2(double eta) { return -std::expm1(-2.0 * eta * eta); }

}  // namespace

void ScatterCoupling::validate() const {
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
    throw ValidationError("scatter efficiency must lie in [0, 1], got " + std::to_string(efficiency));
  }
}

double debye_waller(double eta) {
  require_eta(eta);
  return std::exp(-eta * eta);
}

ScatterProbabilities excitation_probabilities(double eta, ExpansionMode mode) {
  require_eta(eta);
  ScatterProbabilities p;
  p.eta = eta;
  if (mode == ExpansionMode::exact) {
    // e^{-x} sinh(x) = (1 - e^{-2x}) / 2 and e^{-x} cosh(x) = (1 + e^{-2x}) / 2 with x = eta^2.
    p.p00 = debye_waller(eta);
    p.p_odd_total = 0.5 * one_minus_exp_2eta2(eta);
    p.p_even_total = 0.5 * (1.0 + std::exp(-2.0 * eta * eta));
    return p;
  }
  if (eta >= 1.0) {
    throw DomainError("lamb_dicke expansion gives probabilities outside [0, 1] for eta >= 1, got " +
                      std::to_string(eta));
  }
  p.p00 = 1.0 - eta * eta;
  p.p_even_total = 1.0 - eta * eta;
  p.p_odd_total = eta * eta;
  p.outside_lamb_dicke_limit = eta > kLambDickeWarnEta;
  return p;
}

double d2_fraction_localized(double eta) {
  require_eta(eta);
  return 0.5 * one_minus_exp_2eta2(eta);
}

double ratio_R(double eta, ExpansionMode mode) {
  require_positive_eta(eta, "ratio_R");
  const ScatterProbabilities p = excitation_probabilities(eta, mode);
  const double numerator = mode == ExpansionMode::exact ? p.p_odd_total : 1.0 - p.p_even_total;
  return numerator / d2_fraction_localized(eta);
}

double ratio_R_or_limit(double eta, ExpansionMode mode) {
  require_eta(eta);
  return eta == 0.0 ? 1.0 : ratio_R(eta, mode);
}

double r_bound(double eta) {
  require_positive_eta(eta, "r_bound");
  return -std::expm1(-eta * eta) / d2_fraction_localized(eta);
}

double r_bound_or_limit(double eta) {
  require_eta(eta);
  return eta == 0.0 ? 1.0 : r_bound(eta);
}

double r_bound_from_parameters(double mass, double omega, double wavelength) {
  if (!(mass > 0.0 && omega > 0.0 && wavelength > 0.0)) {
    throw DomainError("r_bound_from_parameters: mass, omega and wavelength must be positive");
  }
  const double a = std::sqrt(mass * omega / constants().hbar);
  const double la2 = wavelength * wavelength * a * a;
  const double numerator = -std::expm1(-8.0 * kPi * kPi / la2);
  const double denominator = -std::expm1(-16.0 * kPi * kPi / la2);
  return 2.0 * numerator / denominator;
}

double r_qualitative(double eta) {
  require_positive_eta(eta, "r_qualitative");
  const double bound = r_bound(eta);
  if (eta <= kQualitativeLowEta) return bound;
  if (eta >= kQualitativeHighEta) return 0.5 * bound;
  const double t = std::log(eta / kQualitativeLowEta) / std::log(kQualitativeHighEta / kQualitativeLowEta);
  const double smooth = t * t * (3.0 - 2.0 * t);
  return (1.0 - 0.5 * smooth) * bound;
}

}  // namespace symexp
