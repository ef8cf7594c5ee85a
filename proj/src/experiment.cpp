#include "symexp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "symexp/errors.hpp"

namespace symexp {

namespace {

std::atomic<std::uint64_t> g_parity_checks{0};
std::atomic<std::uint64_t> g_parity_violations{0};

void record_parity_check(int level, Detector detector) {
  g_parity_checks.fetch_add(1, std::memory_order_relaxed);
  if (parity_seen_by(detector) != parity_of_level(level)) {
    g_parity_violations.fetch_add(1, std::memory_order_relaxed);
  }
}

bool photon_scatters(const ScatterCoupling& coupling, Rng& rng) {
  return coupling.efficiency >= 1.0 || uniform01(rng) < coupling.efficiency;
}

// Runs body(i) for i in [0, count) on `workers` threads; each index is
// handled exactly once and writes only its own slot.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned workers, Body body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end] {
      try {
        for (std::uint64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const char* to_string(AssumptionStatus s) noexcept {
  switch (s) {
    case AssumptionStatus::pass: return "pass";
    case AssumptionStatus::warn: return "warn";
    case AssumptionStatus::fail: return "fail";
  }
  return "fail";
}

AssumptionStatus classify_assumption(double value) noexcept {
  if (value < 0.01) return AssumptionStatus::pass;
  if (value < 0.1) return AssumptionStatus::warn;
  return AssumptionStatus::fail;
}

void ExperimentPlan::validate() const {
  config.validate();
  foil.validate();
  if (foil.level != 0) throw ValidationError("trials start from the foil ground state; level must be 0");
  model.validate();
  coupling.validate();
  if (photons_per_pulse < 1) throw ValidationError("photons_per_pulse must be >= 1");
  if (!(observation_window > 0.0)) throw ValidationError("observation_window must be positive");
  if (!(pulse_duration >= 0.0)) throw ValidationError("pulse_duration must be non-negative");
  if (trials < 1) throw ValidationError("trials must be >= 1");
  if (anomaly_threshold < 1) throw ValidationError("anomaly_threshold must be >= 1");
  if (model.variant != CollapseVariant::none && !(particle_count() >= 1.0)) {
    throw ValidationError("foil must contain at least one particle for a collapse model");
  }
}

double ExperimentPlan::eta() const {
  if (config.topology == Topology::closed_loop) return 0.0;
  return lamb_dicke(foil, KickSpec::reflection(config.photon.wavenumber()));
}

AssumptionStatus PulseAssumptionReport::overall() const noexcept { return std::max(interaction, duration); }

PulseAssumptionReport check_pulse_assumptions(const ExperimentPlan& plan) {
  PulseAssumptionReport report;
  const double p_int = excitation_probabilities(plan.eta(), ExpansionMode::exact).p_odd_total;
  report.n_p_int = plan.photons_per_pulse * p_int * plan.coupling.efficiency;
  report.duration_ratio = plan.pulse_duration / plan.foil.period();
  if (plan.photons_per_pulse == 1) return report;
  report.interaction = classify_assumption(report.n_p_int);
  report.duration = classify_assumption(report.duration_ratio);
  return report;
}

LevelSampler::LevelSampler(double eta, int max_level) {
  if (max_level < 0) throw DomainError("LevelSampler: max_level must be non-negative");
  cdf_.reserve(static_cast<std::size_t>(max_level) + 1);
  double running = 0.0;
  for (int n = 0; n <= max_level; ++n) {
    running += std::exp(2.0 * log_kick_magnitude(n, eta));
    cdf_.push_back(running);
  }
}

int LevelSampler::sample(Rng& rng) const {
  const double u = uniform01(rng) * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

double LevelSampler::probability(int n) const {
  if (n < 0 || n >= static_cast<int>(cdf_.size())) return 0.0;
  return n == 0 ? cdf_[0] : cdf_[n] - cdf_[n - 1];
}

LocalizedPulseCounts route_localized_pulse(const InterferometerConfig& config, int photons, double x_loc,
                                           const ScatterCoupling& coupling, Rng& rng) {
  LocalizedPulseCounts counts;
  const ScatterOutcome outcome = Localized{x_loc};
  for (int i = 0; i < photons; ++i) {
    if (!photon_scatters(coupling, rng)) continue;
    ++counts.scattered;
    if (route_photon(config, outcome, rng) == Detector::D2) {
      ++counts.d2;
    } else {
      ++counts.d1;
    }
  }
  return counts;
}

ExperimentRunner::ExperimentRunner(ExperimentPlan plan)
    : plan_((plan.validate(), std::move(plan))),
      eta_(plan_.eta()),
      particle_count_(plan_.particle_count()),
      assumptions_(check_pulse_assumptions(plan_)),
      levels_(eta_) {}

EventRecord ExperimentRunner::single_photon_trial(std::uint64_t trial_id) const {
  if (plan_.photons_per_pulse != 1) {
    throw ValidationError("single-photon trials need photons_per_pulse = 1");
  }
  Rng rng = make_stream_rng(plan_.master_seed, trial_id);
  EventRecord record;
  record.trial_id = trial_id;

  const auto collapse_time = sample_collapse(plan_.model, particle_count_, plan_.observation_window, rng);
  const bool scattered = photon_scatters(plan_.coupling, rng);

  if (collapse_time) {
    record.collapsed = true;
    record.collapse_time = collapse_time;
    record.x_loc = sample_localized_position(plan_.foil, rng);
    if (scattered) {
      const Detector d = route_photon(plan_.config, Localized{*record.x_loc}, rng);
      record.detector = d;
      record.photon_parity = parity_seen_by(d);
    }
    return record;
  }

  const int level = scattered ? levels_.sample(rng) : 0;
  record.foil_final_level = level;
  record.photon_parity = parity_of_level(level);
  if (scattered) {
    const Detector d = route_photon(plan_.config, Coherent{parity_of_level(level)}, rng);
    record.detector = d;
    record_parity_check(level, d);
  }
  return record;
}

PulseRecord ExperimentRunner::pulse(std::uint64_t pulse_id) const {
  if (plan_.photons_per_pulse < 2) throw ValidationError("pulses need photons_per_pulse >= 2");
  if (assumptions_.overall() == AssumptionStatus::fail && !plan_.force) {
    throw PulseAssumptionError("pulse assumptions violated: N * P_int = " + std::to_string(assumptions_.n_p_int) +
                               ", pulse duration / period = " + std::to_string(assumptions_.duration_ratio));
  }
  Rng rng = make_stream_rng(plan_.master_seed, pulse_id);
  PulseRecord record;
  record.pulse_id = pulse_id;
  record.photons = static_cast<std::uint32_t>(plan_.photons_per_pulse);

  const auto collapse_time = sample_collapse(plan_.model, particle_count_, plan_.observation_window, rng);
  if (collapse_time) {
    record.collapsed = true;
    record.collapse_time = collapse_time;
    record.x_loc = sample_localized_position(plan_.foil, rng);
    const auto counts = route_localized_pulse(plan_.config, plan_.photons_per_pulse, *record.x_loc, plan_.coupling, rng);
    record.scattered = counts.scattered;
    record.d1 = counts.d1;
    record.d2 = counts.d2;
  } else {
    // N * P_int << 1: once one photon has excited the foil, the rest scatter elastically.
    for (int i = 0; i < plan_.photons_per_pulse; ++i) {
      if (!photon_scatters(plan_.coupling, rng)) continue;
      ++record.scattered;
      int level = 0;
      if (!record.excited_level) {
        level = levels_.sample(rng);
        if (level > 0) record.excited_level = level;
      }
      const Detector d = route_photon(plan_.config, Coherent{parity_of_level(level)}, rng);
      record_parity_check(level, d);
      if (d == Detector::D2) {
        ++record.d2;
      } else {
        ++record.d1;
      }
    }
  }
  record.anomalous = record.d2 >= static_cast<std::uint32_t>(plan_.anomaly_threshold);
  return record;
}

std::vector<EventRecord> ExperimentRunner::run_single_photon(unsigned workers) const {
  std::vector<EventRecord> records(plan_.trials);
  parallel_for(plan_.trials, workers, [&](std::uint64_t i) { records[i] = single_photon_trial(i); });
  return records;
}

std::vector<PulseRecord> ExperimentRunner::run_pulses(unsigned workers) const {
  std::vector<PulseRecord> records(plan_.trials);
  parallel_for(plan_.trials, workers, [&](std::uint64_t i) { records[i] = pulse(i); });
  return records;
}

EventRecord run_single_photon_trial(const ExperimentPlan& plan, std::uint64_t trial_id) {
  return ExperimentRunner(plan).single_photon_trial(trial_id);
}

PulseRecord run_pulse(const ExperimentPlan& plan, std::uint64_t pulse_id) {
  return ExperimentRunner(plan).pulse(pulse_id);
}

double DetectorCounts::d2_fraction() const noexcept {
  return total() == 0 ? 0.0 : static_cast<double>(d2) / static_cast<double>(total());
}

double DetectorCounts::d2_stderr() const noexcept {
  if (total() == 0) return 0.0;
  const double p = d2_fraction();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(total()));
}

namespace {

void finish(DetectorTally& tally) {
  const DetectorCounts all{tally.d1, tally.d2};
  tally.d2_fraction = all.d2_fraction();
  tally.d2_stderr = all.d2_stderr();
}

}  // namespace

DetectorTally aggregate(std::span<const EventRecord> records) {
  if (records.empty()) throw ValidationError("aggregate: no records");
  DetectorTally tally;
  tally.records = records.size();
  for (const auto& r : records) {
    if (r.collapsed) ++tally.collapse_events;
    if (!r.detector) {
      ++tally.unscattered;
      continue;
    }
    DetectorCounts& split = r.collapsed ? tally.collapsed : tally.coherent;
    if (*r.detector == Detector::D2) {
      ++tally.d2;
      ++split.d2;
    } else {
      ++tally.d1;
      ++split.d1;
    }
  }
  finish(tally);
  return tally;
}

DetectorTally aggregate(std::span<const PulseRecord> pulses) {
  if (pulses.empty()) throw ValidationError("aggregate: no pulses");
  DetectorTally tally;
  tally.records = pulses.size();
  for (const auto& p : pulses) {
    if (p.collapsed) ++tally.collapse_events;
    if (p.anomalous) ++tally.anomalous_pulses;
    tally.unscattered += p.photons - p.scattered;
    tally.d1 += p.d1;
    tally.d2 += p.d2;
    DetectorCounts& split = p.collapsed ? tally.collapsed : tally.coherent;
    split.d1 += p.d1;
    split.d2 += p.d2;
  }
  finish(tally);
  return tally;
}

std::uint64_t parity_violations() noexcept { return g_parity_violations.load(); }
std::uint64_t parity_checks() noexcept { return g_parity_checks.load(); }

}  // namespace symexp
