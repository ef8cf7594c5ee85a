#pragma once

/**
 * @file   collapse.hpp
 * @brief  Induced-localisation (collapse) models for the foil.
 *
 * A collapse is a constant-rate Poisson process; its first event inside the
 * observation window localises the foil at a point drawn from the ground
 * density and the foil stays there for the rest of the trial.
 */

#include <optional>
#include <string_view>

#include "symexp/oscillator.hpp"
#include "symexp/random.hpp"

namespace symexp {

enum class CollapseVariant { none, grw, power_law };

inline constexpr double kGrwPerParticleRate = 1e-15;  // 1/s

struct CollapseModel {
  CollapseVariant variant = CollapseVariant::none;
  double per_particle_rate = 0.0;  ///< 1/s; +infinity forces a collapse at t = 0
  double exponent = 1.0;           ///< power_law: rate ~ count^exponent

  static CollapseModel none() { return {}; }
  static CollapseModel grw(double per_particle_rate = kGrwPerParticleRate) {
    return {CollapseVariant::grw, per_particle_rate, 1.0};
  }
  static CollapseModel power_law(double per_particle_rate, double exponent) {
    return {CollapseVariant::power_law, per_particle_rate, exponent};
  }
  /// Rate -> infinity: every trial collapses immediately.
  static CollapseModel forced();

  void validate() const;
};

std::string_view to_string(CollapseVariant v) noexcept;
std::optional<CollapseVariant> collapse_variant_from_string(std::string_view s) noexcept;

/// Total localisation rate for a foil of `particle_count` particles (>= 1).
double collapse_rate(const CollapseModel& model, double particle_count);

/// Time of the first collapse in [0, window], or nullopt.
/// P(collapse) = 1 - exp(-rate * window).
std::optional<double> sample_collapse(const CollapseModel& model, double particle_count, double window, Rng& rng);

/// X_loc drawn from the ground density of the foil.
double sample_localized_position(const FoilOscillator& foil, Rng& rng);

/// Expected events when `setups` apparatus repeat trials of length
/// `trial_duration` back to back for `campaign_duration` seconds.
double expected_collapse_events(double rate, int setups, double trial_duration, double campaign_duration);

}  // namespace symexp
