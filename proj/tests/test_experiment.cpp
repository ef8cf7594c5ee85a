#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "symexp/constants.hpp"
#include "symexp/errors.hpp"
#include "symexp/event_io.hpp"
#include "symexp/experiment.hpp"

using namespace symexp;

namespace {

constexpr double kLambda = 1e-10;

ExperimentPlan plan_for(double eta, CollapseModel model, std::uint64_t trials, Topology topology = Topology::open_loop) {
  ExperimentPlan plan;
  plan.config = InterferometerConfig{topology, PhotonProbe::from_wavelength(kLambda), 0.0};
  const double mass = units::particles_to_kg(1e8);
  const double omega = eta > 0.0 ? omega_for_lamb_dicke(mass, KickSpec::reflection(kTwoPi / kLambda), eta) : 1e5;
  plan.foil = FoilOscillator{mass, omega, 0};
  plan.model = model;
  plan.trials = trials;
  plan.master_seed = 20240601;
  return plan;
}

}  // namespace

TEST_CASE("assumption classification") {
  CHECK(classify_assumption(0.005) == AssumptionStatus::pass);
  CHECK(classify_assumption(0.05) == AssumptionStatus::warn);
  CHECK(classify_assumption(0.1) == AssumptionStatus::fail);
  CHECK(std::string(to_string(AssumptionStatus::warn)) == "warn");
}

TEST_CASE("pulse assumptions") {
  auto plan = plan_for(0.1, CollapseModel::none(), 10);
  plan.photons_per_pulse = 50;
  auto report = check_pulse_assumptions(plan);
  CHECK(report.n_p_int == doctest::Approx(0.495).epsilon(1e-3));
  CHECK(report.interaction == AssumptionStatus::fail);
  CHECK(report.overall() == AssumptionStatus::fail);

  plan = plan_for(0.01, CollapseModel::none(), 10);
  plan.photons_per_pulse = 50;
  report = check_pulse_assumptions(plan);
  CHECK(report.n_p_int == doctest::Approx(5e-3).epsilon(1e-3));
  CHECK(report.interaction == AssumptionStatus::pass);

  plan.pulse_duration = 0.5 * plan.foil.period();
  CHECK(check_pulse_assumptions(plan).duration == AssumptionStatus::fail);
  CHECK(check_pulse_assumptions(plan).duration_ratio == doctest::Approx(0.5));

  plan = plan_for(2.0, CollapseModel::none(), 10);
  plan.pulse_duration = 1e3;
  CHECK(check_pulse_assumptions(plan).overall() == AssumptionStatus::pass);
}

TEST_CASE("plan validation") {
  auto plan = plan_for(0.1, CollapseModel::none(), 10);
  CHECK_NOTHROW(plan.validate());
  auto bad = plan;
  bad.trials = 0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = plan;
  bad.photons_per_pulse = 0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = plan;
  bad.observation_window = 0.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad = plan;
  bad.coupling.efficiency = 2.0;
  CHECK_THROWS_AS(ExperimentRunner{bad}, ValidationError);
  CHECK(plan_for(0.1, CollapseModel::none(), 1, Topology::closed_loop).eta() == 0.0);
  CHECK(plan.eta() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("level sampler") {
  const LevelSampler levels(0.7);
  CHECK(levels.cdf().back() == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 0; n < 10; ++n) CHECK(levels.probability(n) == doctest::Approx(oracle::poisson_weight(n, 0.7)));
  auto rng = make_stream_rng(3, 3);
  const int trials = 200000;
  std::vector<std::uint64_t> hist(6, 0);
  for (int i = 0; i < trials; ++i) {
    const int n = levels.sample(rng);
    if (n < 6) ++hist[n];
  }
  for (int n = 0; n < 6; ++n) CHECK(oracle::binomial_within(hist[n], trials, levels.probability(n)));
  CHECK(LevelSampler(0.0).sample(rng) == 0);
}

TEST_CASE("single-photon trials") {
  SUBCASE("no kick, no D2") {
    ExperimentRunner runner(plan_for(0.0, CollapseModel::none(), 20000, Topology::closed_loop));
    const auto records = runner.run_single_photon(2);
    const auto tally = aggregate(std::span<const EventRecord>(records));
    CHECK(tally.d2 == 0);
    CHECK(tally.d1 == 20000);
  }
  SUBCASE("coherent D2 fraction") {
    ExperimentRunner runner(plan_for(0.1, CollapseModel::none(), 200000));
    const auto records = runner.run_single_photon(4);
    const auto tally = aggregate(std::span<const EventRecord>(records));
    const double p = std::exp(-0.01) * std::sinh(0.01);
    CHECK(oracle::binomial_within(tally.d2, tally.d1 + tally.d2, p));
    CHECK(tally.collapse_events == 0);
    for (const auto& r : records) {
      REQUIRE(r.foil_final_level.has_value());
      CHECK_FALSE(r.x_loc.has_value());
      CHECK(r.photon_parity == parity_of_level(*r.foil_final_level));
      CHECK(parity_seen_by(*r.detector) == r.photon_parity);
    }
  }
  SUBCASE("forced collapse") {
    ExperimentRunner runner(plan_for(0.5, CollapseModel::forced(), 200000));
    const auto records = runner.run_single_photon(4);
    const auto tally = aggregate(std::span<const EventRecord>(records));
    CHECK(tally.collapse_events == 200000);
    CHECK(oracle::binomial_within(tally.d2, tally.d1 + tally.d2, d2_fraction_localized(0.5)));
    for (const auto& r : records) {
      CHECK(r.collapsed);
      CHECK(r.x_loc.has_value());
      CHECK(r.collapse_time == 0.0);
    }
  }
  SUBCASE("semi-closed loop") {
    // Without collapse it matches the open loop; with forced collapse it never clicks D2.
    const auto open = ExperimentRunner(plan_for(0.5, CollapseModel::none(), 50000)).run_single_photon();
    const auto semi =
        ExperimentRunner(plan_for(0.5, CollapseModel::none(), 50000, Topology::semi_closed)).run_single_photon();
    CHECK(aggregate(std::span<const EventRecord>(open)).d2 == aggregate(std::span<const EventRecord>(semi)).d2);
    const auto forced =
        ExperimentRunner(plan_for(0.5, CollapseModel::forced(), 50000, Topology::semi_closed)).run_single_photon();
    const auto tally = aggregate(std::span<const EventRecord>(forced));
    CHECK(tally.collapsed.d2 == 0);
    CHECK(tally.collapsed.d1 == 50000);
  }
  SUBCASE("efficiency") {
    auto plan = plan_for(0.3, CollapseModel::none(), 100000);
    plan.coupling.efficiency = 0.25;
    const auto records = ExperimentRunner(plan).run_single_photon();
    const auto tally = aggregate(std::span<const EventRecord>(records));
    CHECK(tally.d1 + tally.d2 + tally.unscattered == 100000);
    CHECK(oracle::binomial_within(tally.d1 + tally.d2, 100000, 0.25));
    CHECK(oracle::binomial_within(tally.d2, tally.d1 + tally.d2, excitation_probabilities(0.3, ExpansionMode::exact).p_odd_total));
    for (const auto& r : records) {
      if (!r.scattered()) CHECK(r.foil_final_level == 0);
    }
  }
  SUBCASE("free function matches runner") {
    const auto plan = plan_for(0.4, CollapseModel::grw(1e-6), 10);
    const ExperimentRunner runner(plan);
    for (std::uint64_t id = 0; id < 10; ++id) {
      const auto a = runner.single_photon_trial(id);
      const auto b = run_single_photon_trial(plan, id);
      CHECK(a.detector == b.detector);
      CHECK(a.foil_final_level == b.foil_final_level);
      CHECK(a.x_loc == b.x_loc);
    }
  }
}

TEST_CASE("pulses") {
  SUBCASE("no collapse: at most one D2 click") {
    auto plan = plan_for(0.01, CollapseModel::none(), 20000);
    plan.photons_per_pulse = 50;
    const auto pulses = ExperimentRunner(plan).run_pulses(3);
    for (const auto& p : pulses) {
      CHECK(p.d2 <= 1);
      CHECK_FALSE(p.anomalous);
      CHECK(p.d1 + p.d2 == p.scattered);
    }
    // Forcing past a failed check keeps the bound.
    auto hot = plan_for(0.5, CollapseModel::none(), 5000);
    hot.photons_per_pulse = 100;
    CHECK_THROWS_AS(ExperimentRunner(hot).pulse(0), PulseAssumptionError);
    hot.force = true;
    for (const auto& p : ExperimentRunner(hot).run_pulses()) CHECK(p.d2 <= 1);
  }
  SUBCASE("maximal localisation signal") {
    const InterferometerConfig config{Topology::open_loop, PhotonProbe::from_wavelength(kLambda), 0.0};
    const double x = kPi / (4.0 * config.photon.wavenumber());  // 2 k x = pi / 2
    auto rng = make_stream_rng(8, 8);
    const auto counts = route_localized_pulse(config, 100, x, ScatterCoupling{}, rng);
    CHECK(counts.d2 >= 99);
    CHECK(counts.scattered == 100);
    const InterferometerConfig semi{Topology::semi_closed, config.photon, 0.0};
    CHECK(route_localized_pulse(semi, 100, x, ScatterCoupling{}, rng).d2 == 0);
  }
  SUBCASE("forced collapse mean") {
    auto plan = plan_for(0.1, CollapseModel::forced(), 20000);
    plan.photons_per_pulse = 100;
    plan.force = true;
    const auto pulses = ExperimentRunner(plan).run_pulses(4);
    const auto tally = aggregate(std::span<const PulseRecord>(pulses));
    // Per-pulse D2 counts are a mixture over x_loc; use their sample variance.
    double mean = 0.0;
    for (const auto& p : pulses) mean += p.d2;
    mean /= pulses.size();
    double var = 0.0;
    for (const auto& p : pulses) var += (p.d2 - mean) * (p.d2 - mean);
    var /= pulses.size() - 1;
    const double expected = 100.0 * d2_fraction_localized(0.1);
    CHECK(std::abs(mean - expected) <= 5.0 * std::sqrt(var / pulses.size()));
    CHECK(tally.collapse_events == pulses.size());
    CHECK(tally.anomalous_pulses > 0);
  }
  CHECK_THROWS_AS(ExperimentRunner(plan_for(0.1, CollapseModel::none(), 1)).pulse(0), ValidationError);
}

TEST_CASE("aggregation") {
  CHECK_THROWS_AS(aggregate(std::span<const EventRecord>()), ValidationError);
  CHECK_THROWS_AS(aggregate(std::span<const PulseRecord>()), ValidationError);

  std::vector<EventRecord> all_d1(10);
  for (auto& r : all_d1) r.detector = Detector::D1;
  CHECK(aggregate(std::span<const EventRecord>(all_d1)).d2_fraction == 0.0);

  std::vector<EventRecord> half(1000);
  for (std::size_t i = 0; i < half.size(); ++i) half[i].detector = i % 2 ? Detector::D2 : Detector::D1;
  const auto tally = aggregate(std::span<const EventRecord>(half));
  CHECK(tally.d2_fraction == 0.5);
  CHECK(tally.d2_stderr == doctest::Approx(std::sqrt(0.25 / 1000)));
  CHECK(tally.d1 + tally.d2 == 1000);
}

TEST_CASE("determinism across worker counts") {
  auto plan = plan_for(0.6, CollapseModel::grw(3e-9), 30000);
  const ExperimentRunner runner(plan);
  std::string reference;
  for (unsigned workers : {1u, 2u, 3u, 8u, 0u}) {
    std::ostringstream out;
    const auto records = runner.run_single_photon(workers);
    write_event_csv(out, records, "seed=20240601");
    if (reference.empty()) {
      reference = out.str();
    } else {
      CHECK(out.str() == reference);
    }
  }
  plan.photons_per_pulse = 2;
  plan.force = true;
  const ExperimentRunner pulses(plan);
  std::ostringstream a, b;
  write_pulse_csv(a, pulses.run_pulses(1));
  write_pulse_csv(b, pulses.run_pulses(5));
  CHECK(a.str() == b.str());
}

TEST_CASE("event csv") {
  std::vector<EventRecord> records(2);
  records[0] = EventRecord{0, false, std::nullopt, std::nullopt, 1, Parity::odd, Detector::D2};
  records[1] = EventRecord{1, true, 0.25, -1.5e-12, std::nullopt, Parity::even, std::nullopt};
  std::ostringstream out;
  write_event_csv(out, records, "line one\nline two");
  CHECK(out.str() == "# line one\n# line two\n" + std::string(kEventCsvHeader) +
                         "\n0,0,,,1,odd,D2\n1,1,0.25,-1.5e-12,,even,none\n");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-7) == "1e-07");
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}

TEST_CASE("parity violations stay at zero") {
  CHECK(parity_checks() > 0);
  CHECK(parity_violations() == 0);
}
