#pragma once

/**
 * @file   experiment.hpp
 * @brief  Monte-Carlo engine for the single-photon and multi-photon (pulse) procedures.
 *
 * Every trial or pulse draws from its own generator seeded by
 * (master_seed, trial_id), so record streams are bit-identical for any
 * worker count. The foil restarts in the ground state for every trial and
 * is probed at the end of the observation window; at most one collapse
 * happens per window.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symexp/collapse.hpp"
#include "symexp/interferometer.hpp"
#include "symexp/oscillator.hpp"
#include "symexp/random.hpp"
#include "symexp/scattering.hpp"

namespace symexp {

enum class AssumptionStatus { pass, warn, fail };

const char* to_string(AssumptionStatus s) noexcept;

/// pass below 0.01, warn below 0.1, fail otherwise.
AssumptionStatus classify_assumption(double value) noexcept;

struct ExperimentPlan {
  InterferometerConfig config;
  FoilOscillator foil;
  CollapseModel model;
  ScatterCoupling coupling;
  int photons_per_pulse = 1;        ///< N; 1 selects the single-photon procedure
  double observation_window = 1.0;  ///< s
  double pulse_duration = 0.0;      ///< s
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  int anomaly_threshold = 2;  ///< pulse D2 clicks at or above this are anomalous
  /// Run pulses even when check_pulse_assumptions() fails.
  bool force = false;

  /// Throws ValidationError / DomainError for inconsistent plans.
  void validate() const;
  /// Lamb-Dicke parameter of the reflection kick; 0 for the empty closed loop.
  double eta() const;
  double particle_count() const { return foil.particle_count(); }
};

struct PulseAssumptionReport {
  double n_p_int = 0.0;  ///< N * p_odd_exact(eta) * efficiency
  AssumptionStatus interaction = AssumptionStatus::pass;
  double duration_ratio = 0.0;  ///< pulse duration / oscillator period
  AssumptionStatus duration = AssumptionStatus::pass;

  AssumptionStatus overall() const noexcept;
};

PulseAssumptionReport check_pulse_assumptions(const ExperimentPlan& plan);

struct EventRecord {
  std::uint64_t trial_id = 0;
  bool collapsed = false;
  std::optional<double> collapse_time;
  std::optional<double> x_loc;
  std::optional<int> foil_final_level;  ///< absent after a collapse
  Parity photon_parity = Parity::even;
  std::optional<Detector> detector;  ///< absent when the photon did not scatter

  bool scattered() const noexcept { return detector.has_value(); }
};

struct PulseRecord {
  std::uint64_t pulse_id = 0;
  bool collapsed = false;
  std::optional<double> collapse_time;
  std::optional<double> x_loc;
  std::optional<int> excited_level;  ///< level reached by the single inelastic photon, if any
  std::uint32_t photons = 0;
  std::uint32_t scattered = 0;
  std::uint32_t d1 = 0;
  std::uint32_t d2 = 0;
  bool anomalous = false;
};

/// Inverse-CDF sampler of the final foil level, P(n) = |<n|exp(i eta X)|0>|^2.
class LevelSampler {
 public:
  explicit LevelSampler(double eta, int max_level = kDefaultMaxLevel);
  int sample(Rng& rng) const;
  double probability(int n) const;
  const std::vector<double>& cdf() const noexcept { return cdf_; }

 private:
  std::vector<double> cdf_;
};

struct LocalizedPulseCounts {
  std::uint32_t scattered = 0;
  std::uint32_t d1 = 0;
  std::uint32_t d2 = 0;
};

/// N photons probing one foil localised at x_loc; each scatters with the
/// coupling efficiency and routes independently.
LocalizedPulseCounts route_localized_pulse(const InterferometerConfig& config, int photons, double x_loc,
                                           const ScatterCoupling& coupling, Rng& rng);

class ExperimentRunner {
 public:
  /// Validates the plan and precomputes the level distribution.
  explicit ExperimentRunner(ExperimentPlan plan);

  const ExperimentPlan& plan() const noexcept { return plan_; }
  double eta() const noexcept { return eta_; }
  const PulseAssumptionReport& assumptions() const noexcept { return assumptions_; }

  EventRecord single_photon_trial(std::uint64_t trial_id) const;
  /// Throws PulseAssumptionError when the assumption check fails and plan.force is unset.
  PulseRecord pulse(std::uint64_t pulse_id) const;

  /// All trials 0..trials-1, ordered by trial id. workers = 0 uses the hardware concurrency.
  std::vector<EventRecord> run_single_photon(unsigned workers = 1) const;
  std::vector<PulseRecord> run_pulses(unsigned workers = 1) const;

 private:
  ExperimentPlan plan_;
  double eta_;
  double particle_count_;
  PulseAssumptionReport assumptions_;
  LevelSampler levels_;
};

EventRecord run_single_photon_trial(const ExperimentPlan& plan, std::uint64_t trial_id);
PulseRecord run_pulse(const ExperimentPlan& plan, std::uint64_t pulse_id);

struct DetectorCounts {
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;

  std::uint64_t total() const noexcept { return d1 + d2; }
  double d2_fraction() const noexcept;
  /// Binomial standard error sqrt(p (1 - p) / n).
  double d2_stderr() const noexcept;
};

struct DetectorTally {
  std::uint64_t records = 0;
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
  std::uint64_t unscattered = 0;
  double d2_fraction = 0.0;
  double d2_stderr = 0.0;
  std::uint64_t anomalous_pulses = 0;
  std::uint64_t collapse_events = 0;
  DetectorCounts coherent;   ///< clicks from trials without a collapse
  DetectorCounts collapsed;  ///< clicks from trials with a collapse
};

/// Throws ValidationError on empty input.
DetectorTally aggregate(std::span<const EventRecord> records);
DetectorTally aggregate(std::span<const PulseRecord> pulses);

/// Coherent events seen so far (process-wide) whose photon parity differed from the foil level parity.
std::uint64_t parity_violations() noexcept;
/// Coherent events checked so far (process-wide).
std::uint64_t parity_checks() noexcept;

}  // namespace symexp
