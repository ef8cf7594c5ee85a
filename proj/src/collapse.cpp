#include "symexp/collapse.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "symexp/errors.hpp"

namespace symexp {

CollapseModel CollapseModel::forced() {
  return {CollapseVariant::grw, std::numeric_limits<double>::infinity(), 1.0};
}

void CollapseModel::validate() const {
  if (std::isnan(per_particle_rate) || per_particle_rate < 0.0) {
    throw ValidationError("collapse per-particle rate must be >= 0");
  }
  if (!std::isfinite(exponent)) throw ValidationError("collapse exponent must be finite");
}

std::string_view to_string(CollapseVariant v) noexcept {
  switch (v) {
    case CollapseVariant::none: return "none";
    case CollapseVariant::grw: return "grw";
    case CollapseVariant::power_law: return "power_law";
  }
  return "none";
}

std::optional<CollapseVariant> collapse_variant_from_string(std::string_view s) noexcept {
  if (s == "none") return CollapseVariant::none;
  if (s == "grw") return CollapseVariant::grw;
  if (s == "power_law") return CollapseVariant::power_law;
  return std::nullopt;
}

double collapse_rate(const CollapseModel& model, double particle_count) {
  model.validate();
  if (!(particle_count >= 1.0)) {
    throw DomainError("collapse_rate: particle count must be >= 1, got " + std::to_string(particle_count));
  }
  switch (model.variant) {
    case CollapseVariant::none: return 0.0;
    case CollapseVariant::grw: return particle_count * model.per_particle_rate;
    case CollapseVariant::power_law: return model.per_particle_rate * std::pow(particle_count, model.exponent);
  }
  return 0.0;
}

std::optional<double> sample_collapse(const CollapseModel& model, double particle_count, double window, Rng& rng) {
  if (!(window > 0.0)) throw DomainError("sample_collapse: window must be positive");
  const double rate = collapse_rate(model, particle_count);
  if (rate == 0.0) return std::nullopt;
  if (std::isinf(rate)) return 0.0;
  // Inverse CDF of the exponential waiting time; -log1p(-u) keeps precision for tiny rates.
  const double u = uniform01(rng);
  const double t = -std::log1p(-u) / rate;
  if (t > window) return std::nullopt;
  return t;
}

double sample_localized_position(const FoilOscillator& foil, Rng& rng) { return sample_position(foil, rng); }

double expected_collapse_events(double rate, int setups, double trial_duration, double campaign_duration) {
  if (!(rate >= 0.0) || setups < 0 || !(trial_duration > 0.0) || !(campaign_duration >= 0.0)) {
    throw DomainError("expected_collapse_events: invalid arguments");
  }
  const double trials = setups * (campaign_duration / trial_duration);
  return trials * -std::expm1(-rate * trial_duration);
}

}  // namespace symexp
