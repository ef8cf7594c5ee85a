#include "symexp/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "symexp/constants.hpp"
#include "symexp/event_io.hpp"
#include "symexp/scattering.hpp"

namespace symexp::cli {

namespace {

const std::set<std::string> kPhotonKeys{"wavelength_nm", "wavelength_m"};
const std::set<std::string> kFoilKeys{"particles", "mass_kg", "frequency_hz", "omega_rad_s", "eta"};
const std::set<std::string> kCollapseKeys{"model", "per_particle_rate", "exponent"};
const std::set<std::string> kExperimentKeys{"topology",        "photons_per_pulse", "observation_window_s",
                                            "pulse_duration_s", "trials",            "seed",
                                            "efficiency",       "anomaly_threshold", "transmittance"};
const std::set<std::string> kScanEtaKeys{"eta_min", "eta_max", "steps", "spacing"};
const std::set<std::string> kScanResolutionKeys{"particles_min", "particles_max", "steps", "wavelengths_nm",
                                                "margin"};
const std::set<std::string> kMirrorKeys{"preset",           "refractive_index", "extinction_coefficient",
                                        "youngs_modulus_pa", "density_kg_m3",    "poisson_ratio",
                                        "atomic_volume_m3", "thickness_angstrom", "thickness_m",
                                        "lateral_size_mm",  "lateral_size_m",   "shape",
                                        "surrounding_index", "surrounding_extinction", "margin"};

constexpr double kMinWavelength = 0.1e-9;
constexpr double kMaxWavelength = 1000e-9;

double positive(const Config& c, const std::string& key, double fallback) {
  const double v = c.get_double(key).value_or(fallback);
  if (!(v > 0.0)) c.fail(key, "must be positive");
  return v;
}

/// Exactly one of the given keys, converted to SI by the matching factor.
std::optional<double> one_of(const Config& c, std::initializer_list<std::pair<const char*, double>> keys,
                             bool required, const std::string& what) {
  std::optional<double> value;
  std::string found;
  for (const auto& [key, factor] : keys) {
    if (!c.has(key)) continue;
    if (value) c.fail(key, "conflicts with " + found + " (give only one " + what + ")");
    value = positive(c, key, 0.0) * factor;
    found = key;
  }
  if (!value && required) throw ConfigError(c.source() + ": missing " + what, 0);
  return value;
}

PhotonProbe photon_from_config(const Config& c, std::optional<double> fallback_wavelength = std::nullopt) {
  c.check_known("photon", kPhotonKeys);
  auto wavelength = one_of(c, {{"photon.wavelength_nm", units::kNanometre}, {"photon.wavelength_m", 1.0}},
                           !fallback_wavelength, "photon wavelength (photon.wavelength_nm)");
  return PhotonProbe::from_wavelength(wavelength.value_or(fallback_wavelength.value_or(0.0)));
}

std::string header_comment(std::string_view command, const Config& config, std::uint64_t seed) {
  const std::string canonical = config.canonical() + "seed=" + std::to_string(seed) + "\n";
  return "symexp " + std::string(command) + "\nconfig_hash=" + hex64(fnv1a64(canonical)) +
         " seed=" + std::to_string(seed);
}

void write_comment(std::ostream& out, std::string_view comment) {
  std::istringstream lines{std::string(comment)};
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file " + path);
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing output file " + path);
}

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned workers = 0;
  bool force = false;
  std::vector<std::string> overrides;
  std::string summary;
};

Config load_config(const CommonOptions& opts) {
  Config config = opts.config_path.empty() ? Config::parse("", "<defaults>") : Config::load(opts.config_path);
  for (const auto& o : opts.overrides) config.apply_override(o);
  if (opts.seed) config.set("experiment.seed", std::to_string(*opts.seed));
  return config;
}

std::uint64_t seed_of(const Config& config) {
  const auto seed = config.get_int("experiment.seed").value_or(0);
  if (seed < 0) config.fail("experiment.seed", "must be non-negative");
  return static_cast<std::uint64_t>(seed);
}

void emit(const CommonOptions& opts, const std::string& content, std::ostream& out) {
  if (opts.out.empty()) {
    out << content;
  } else {
    write_file(opts.out, content);
  }
}

int cmd_scan_eta(const CommonOptions& opts, std::ostream& out) {
  const Config config = load_config(opts);
  const ScanEtaSpec spec = scan_eta_spec(config);
  std::ostringstream csv;
  write_scan_eta(csv, spec, header_comment("scan-eta", config, seed_of(config)));
  emit(opts, csv.str(), out);
  return kExitOk;
}

int cmd_scan_resolution(const CommonOptions& opts, std::ostream& out) {
  const Config config = load_config(opts);
  const ScanResolutionSpec spec = scan_resolution_spec(config);
  std::ostringstream csv;
  write_scan_resolution(csv, spec, header_comment("scan-resolution", config, seed_of(config)));
  emit(opts, csv.str(), out);
  return kExitOk;
}

int cmd_simulate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.config_path.empty() && opts.overrides.empty()) {
    throw ConfigError("simulate: a configuration is required (--config PATH or --set)", 0);
  }
  const Config config = load_config(opts);
  ExperimentPlan plan = plan_from_config(config);
  plan.force = opts.force;
  const ExperimentRunner runner(plan);
  const auto& report = runner.assumptions();
  err << "pulse assumptions: N*P_int = " << format_number(report.n_p_int) << " ("
      << to_string(report.interaction) << "), pulse/period = " << format_number(report.duration_ratio) << " ("
      << to_string(report.duration) << ")\n";
  if (report.overall() == AssumptionStatus::fail && !opts.force) {
    err << "error: pulse assumption check failed; rerun with --force to simulate anyway\n";
    return kExitAssumption;
  }

  const std::string comment = header_comment("simulate", config, plan.master_seed);
  std::ostringstream summary;
  write_comment(summary, comment);
  if (plan.photons_per_pulse == 1) {
    const auto records = runner.run_single_photon(opts.workers);
    if (!opts.out.empty()) {
      std::ostringstream csv;
      write_event_csv(csv, records, comment);
      write_file(opts.out, csv.str());
    }
    write_simulation_summary(summary, runner, aggregate(records));
  } else {
    const auto pulses = runner.run_pulses(opts.workers);
    if (!opts.out.empty()) {
      std::ostringstream csv;
      write_pulse_csv(csv, pulses, comment);
      write_file(opts.out, csv.str());
    }
    const DetectorTally tally = aggregate(pulses);
    write_simulation_summary(summary, runner, tally);
    std::uint64_t coherent_pulses = 0;
    std::uint64_t false_alarms = 0;
    for (const auto& p : pulses) {
      if (p.collapsed) continue;
      ++coherent_pulses;
      if (p.anomalous) ++false_alarms;
    }
    summary << "false_alarm_rate: "
            << format_number(coherent_pulses ? static_cast<double>(false_alarms) / coherent_pulses : 0.0) << "\n";
  }
  out << summary.str();
  if (!opts.summary.empty()) write_file(opts.summary, summary.str());
  return kExitOk;
}

int cmd_feasibility(const CommonOptions& opts, std::ostream& out) {
  const Config config = load_config(opts);
  const FeasibilityInput input = feasibility_from_config(config);
  const auto rows = feasibility_report(input);
  const std::string comment = header_comment("feasibility", config, seed_of(config));
  write_comment(out, comment);
  write_report_text(out, rows);
  if (!opts.out.empty()) {
    std::ostringstream csv;
    write_comment(csv, comment);
    write_report_csv(csv, rows);
    write_file(opts.out, csv.str());
  }
  return kExitOk;
}

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "Configuration file");
  sub->add_option("--seed", opts.seed, "Master seed (overrides experiment.seed)");
  sub->add_option("--out", opts.out, "Output CSV path (stdout when omitted)");
  sub->add_option("--workers", opts.workers, "Worker threads (0 = hardware concurrency)");
  sub->add_flag("--force", opts.force, "Proceed even when an assumption check fails");
  sub->add_option("--set", opts.overrides, "Override a config value: section.key=value")->allow_extra_args(false);
}

}  // namespace

std::vector<double> scan_grid(double lo, double hi, int steps, bool log_spacing) {
  if (steps < 2) throw ValidationError("scan needs at least 2 steps");
  if (!(lo > 0.0 && hi > lo)) throw ValidationError("scan range must satisfy 0 < min < max");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    grid[i] = log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  grid.back() = hi;
  return grid;
}

ScanEtaSpec scan_eta_spec(const Config& c) {
  c.check_known("scan_eta", kScanEtaKeys);
  ScanEtaSpec spec;
  spec.eta_min = positive(c, "scan_eta.eta_min", spec.eta_min);
  spec.eta_max = positive(c, "scan_eta.eta_max", spec.eta_max);
  if (!(spec.eta_max > spec.eta_min)) c.fail("scan_eta.eta_max", "must exceed scan_eta.eta_min");
  spec.steps = static_cast<int>(c.get_int("scan_eta.steps").value_or(spec.steps));
  if (spec.steps < 2 || spec.steps > 10'000'000) c.fail("scan_eta.steps", "must lie in [2, 1e7]");
  const std::string spacing = c.get_string("scan_eta.spacing").value_or("log");
  if (spacing != "log" && spacing != "linear") c.fail("scan_eta.spacing", "must be 'log' or 'linear'");
  spec.log_spacing = spacing == "log";
  return spec;
}

ScanResolutionSpec scan_resolution_spec(const Config& c) {
  c.check_known("scan_resolution", kScanResolutionKeys);
  ScanResolutionSpec spec;
  spec.particles_min = c.get_double("scan_resolution.particles_min").value_or(spec.particles_min);
  if (!(spec.particles_min >= 1.0)) c.fail("scan_resolution.particles_min", "must be >= 1");
  spec.particles_max = positive(c, "scan_resolution.particles_max", spec.particles_max);
  if (!(spec.particles_max > spec.particles_min)) {
    c.fail("scan_resolution.particles_max", "must exceed scan_resolution.particles_min");
  }
  spec.steps = static_cast<int>(c.get_int("scan_resolution.steps").value_or(spec.steps));
  if (spec.steps < 2 || spec.steps > 10'000'000) c.fail("scan_resolution.steps", "must lie in [2, 1e7]");
  if (const auto nm = c.get_double_list("scan_resolution.wavelengths_nm")) {
    spec.wavelengths.clear();
    for (double w : *nm) {
      const double m = units::nm_to_m(w);
      if (!(m >= kMinWavelength * (1 - 1e-9) && m <= kMaxWavelength * (1 + 1e-9))) {
        c.fail("scan_resolution.wavelengths_nm", "wavelengths must lie in [0.1, 1000] nm");
      }
      spec.wavelengths.push_back(m);
    }
  }
  spec.margin = c.get_double("scan_resolution.margin").value_or(spec.margin);
  if (!(spec.margin >= 1.0)) c.fail("scan_resolution.margin", "must be >= 1");
  return spec;
}

ExperimentPlan plan_from_config(const Config& c) {
  c.check_known("foil", kFoilKeys);
  c.check_known("collapse", kCollapseKeys);
  c.check_known("experiment", kExperimentKeys);

  ExperimentPlan plan;
  const std::string topology = c.get_string("experiment.topology").value_or("open_loop");
  if (topology == "open_loop") {
    plan.config.topology = Topology::open_loop;
  } else if (topology == "closed_loop") {
    plan.config.topology = Topology::closed_loop;
  } else if (topology == "semi_closed") {
    plan.config.topology = Topology::semi_closed;
  } else {
    c.fail("experiment.topology", "must be open_loop, closed_loop or semi_closed");
  }
  plan.config.photon = photon_from_config(c);
  plan.config.mirror_transmittance = c.get_double("experiment.transmittance").value_or(0.0);
  if (plan.config.mirror_transmittance != 0.0) {
    c.fail("experiment.transmittance", "must be 0 (partial transmission is not modelled)");
  }

  const double mass = *one_of(c, {{"foil.particles", constants().nucleon_mass}, {"foil.mass_kg", 1.0}}, true,
                              "foil mass (foil.particles or foil.mass_kg)");
  const auto omega = one_of(c, {{"foil.frequency_hz", kTwoPi}, {"foil.omega_rad_s", 1.0}}, false, "foil frequency");
  const auto eta = c.get_double("foil.eta");
  if (eta && omega) c.fail("foil.eta", "conflicts with the foil frequency; give one of them");
  if (!eta && !omega) {
    throw ConfigError(c.source() + ": missing foil frequency (foil.frequency_hz, foil.omega_rad_s or foil.eta)", 0);
  }
  if (eta) {
    if (!(*eta > 0.0)) c.fail("foil.eta", "must be positive");
    plan.foil = FoilOscillator{
        mass, omega_for_lamb_dicke(mass, KickSpec::reflection(plan.config.photon.wavenumber()), *eta), 0};
  } else {
    plan.foil = FoilOscillator{mass, *omega, 0};
  }

  const std::string model = c.get_string("collapse.model").value_or("none");
  const double rate = c.get_double("collapse.per_particle_rate").value_or(kGrwPerParticleRate);
  if (!(rate >= 0.0)) c.fail("collapse.per_particle_rate", "must be >= 0");
  const double exponent = c.get_double("collapse.exponent").value_or(1.0);
  if (!std::isfinite(exponent)) c.fail("collapse.exponent", "must be finite");
  if (model == "forced") {
    plan.model = CollapseModel::forced();
  } else if (const auto variant = collapse_variant_from_string(model)) {
    plan.model = CollapseModel{*variant, *variant == CollapseVariant::none ? 0.0 : rate, exponent};
  } else {
    c.fail("collapse.model", "must be none, grw, power_law or forced");
  }
  if (plan.model.variant != CollapseVariant::none && !(plan.foil.particle_count() >= 1.0)) {
    c.fail(c.has("foil.particles") ? "foil.particles" : "foil.mass_kg",
           "a collapse model needs at least one particle");
  }

  const auto photons = c.get_int("experiment.photons_per_pulse").value_or(1);
  if (photons < 1 || photons > 1'000'000'000) c.fail("experiment.photons_per_pulse", "must lie in [1, 1e9]");
  plan.photons_per_pulse = static_cast<int>(photons);
  plan.observation_window = positive(c, "experiment.observation_window_s", 1.0);
  plan.pulse_duration = c.get_double("experiment.pulse_duration_s").value_or(0.0);
  if (!(plan.pulse_duration >= 0.0)) c.fail("experiment.pulse_duration_s", "must be >= 0");
  const auto trials = c.get_int("experiment.trials").value_or(1000);
  if (trials < 1) c.fail("experiment.trials", "must be >= 1");
  plan.trials = static_cast<std::uint64_t>(trials);
  plan.master_seed = seed_of(c);
  plan.coupling.efficiency = c.get_double("experiment.efficiency").value_or(1.0);
  if (!(plan.coupling.efficiency >= 0.0 && plan.coupling.efficiency <= 1.0)) {
    c.fail("experiment.efficiency", "must lie in [0, 1]");
  }
  const auto threshold = c.get_int("experiment.anomaly_threshold").value_or(2);
  if (threshold < 1) c.fail("experiment.anomaly_threshold", "must be >= 1");
  plan.anomaly_threshold = static_cast<int>(threshold);
  plan.validate();
  return plan;
}

FeasibilityInput feasibility_from_config(const Config& c) {
  if (!c.has_section("mirror")) {
    throw ConfigError("feasibility: a [mirror] section is required (e.g. preset, thickness_angstrom, lateral_size_mm)",
                      0);
  }
  c.check_known("mirror", kMirrorKeys);
  FeasibilityInput input;
  const std::string preset = c.get_string("mirror.preset").value_or("custom");
  std::optional<double> default_wavelength;
  if (preset == "metal_xray") {
    input.material = MirrorMaterial::metal_xray();
    default_wavelength = 0.1e-9;
  } else if (preset == "metal_red") {
    input.material = MirrorMaterial::metal_red();
    default_wavelength = 700e-9;
  } else if (preset == "custom") {
    for (const char* key : {"mirror.refractive_index", "mirror.youngs_modulus_pa", "mirror.density_kg_m3",
                            "mirror.poisson_ratio", "mirror.atomic_volume_m3"}) {
      if (!c.has(key)) throw ConfigError(c.source() + ": custom mirror needs '" + key + "'", 0);
    }
  } else {
    c.fail("mirror.preset", "must be metal_xray, metal_red or custom");
  }
  auto& m = input.material;
  m.refractive_index = c.get_double("mirror.refractive_index").value_or(m.refractive_index);
  if (!(m.refractive_index > 0.0)) c.fail("mirror.refractive_index", "must be > 0");
  m.extinction_coefficient = c.get_double("mirror.extinction_coefficient").value_or(m.extinction_coefficient);
  if (!(m.extinction_coefficient >= 0.0)) c.fail("mirror.extinction_coefficient", "must be >= 0");
  m.youngs_modulus = c.get_double("mirror.youngs_modulus_pa").value_or(m.youngs_modulus);
  if (!(m.youngs_modulus > 0.0)) c.fail("mirror.youngs_modulus_pa", "must be > 0");
  m.density = c.get_double("mirror.density_kg_m3").value_or(m.density);
  if (!(m.density > 0.0)) c.fail("mirror.density_kg_m3", "must be > 0");
  m.poisson_ratio = c.get_double("mirror.poisson_ratio").value_or(m.poisson_ratio);
  if (!(m.poisson_ratio >= 0.0 && m.poisson_ratio < 0.5)) c.fail("mirror.poisson_ratio", "must lie in [0, 0.5)");
  m.atomic_volume = c.get_double("mirror.atomic_volume_m3").value_or(m.atomic_volume);
  if (!(m.atomic_volume > 0.0)) c.fail("mirror.atomic_volume_m3", "must be > 0");

  input.geometry.thickness = *one_of(c, {{"mirror.thickness_angstrom", units::kAngstrom}, {"mirror.thickness_m", 1.0}},
                                     true, "mirror thickness (mirror.thickness_angstrom or mirror.thickness_m)");
  input.geometry.lateral_size = *one_of(c, {{"mirror.lateral_size_mm", 1e-3}, {"mirror.lateral_size_m", 1.0}}, true,
                                        "mirror size (mirror.lateral_size_mm or mirror.lateral_size_m)");
  const std::string shape = c.get_string("mirror.shape").value_or("rectangular");
  if (shape == "rectangular") {
    input.geometry.shape = PlateShape::rectangular_clamped;
  } else if (shape == "circular") {
    input.geometry.shape = PlateShape::circular_clamped;
  } else {
    c.fail("mirror.shape", "must be rectangular or circular");
  }
  input.surrounding_index = {c.get_double("mirror.surrounding_index").value_or(1.0),
                             c.get_double("mirror.surrounding_extinction").value_or(0.0)};
  if (!(input.surrounding_index.real() > 0.0)) c.fail("mirror.surrounding_index", "must be > 0");
  input.margin = c.get_double("mirror.margin").value_or(kDefaultMargin);
  if (!(input.margin >= 1.0)) c.fail("mirror.margin", "must be >= 1");
  input.photon = photon_from_config(c, default_wavelength);
  return input;
}

void write_scan_eta(std::ostream& out, const ScanEtaSpec& spec, std::string_view comment) {
  write_comment(out, comment);
  out << "eta,r_bound,r_qualitative,p00,p_odd_exact,d2_fraction_localized\n";
  for (double eta : scan_grid(spec.eta_min, spec.eta_max, spec.steps, spec.log_spacing)) {
    const auto p = excitation_probabilities(eta, ExpansionMode::exact);
    out << format_number(eta) << ',' << format_number(r_bound(eta)) << ',' << format_number(r_qualitative(eta)) << ','
        << format_number(p.p00) << ',' << format_number(p.p_odd_total) << ','
        << format_number(d2_fraction_localized(eta)) << '\n';
  }
}

void write_scan_resolution(std::ostream& out, const ScanResolutionSpec& spec, std::string_view comment) {
  write_comment(out, comment);
  out << "particles,mass_kg,wavelength_nm,omega_max_rad_s,m_omega_max,energy_resolution\n";
  const auto counts = scan_grid(spec.particles_min, spec.particles_max, spec.steps, true);
  for (double wavelength : spec.wavelengths) {
    const PhotonProbe photon = PhotonProbe::from_wavelength(wavelength);
    for (double n : counts) {
      const double mass = units::particles_to_kg(n);
      const double omega = max_omega_for_resolution(mass, wavelength, spec.margin);
      const double resolution = energy_resolution_required(FoilOscillator{mass, omega, 0}, photon);
      out << format_number(n) << ',' << format_number(mass) << ',' << format_number(units::m_to_nm(wavelength))
          << ',' << format_number(omega) << ',' << format_number(mass * omega) << ',' << format_number(resolution)
          << '\n';
    }
  }
}

void write_simulation_summary(std::ostream& out, const ExperimentRunner& runner, const DetectorTally& tally) {
  const ExperimentPlan& plan = runner.plan();
  const double eta = runner.eta();
  const double rate = plan.model.variant == CollapseVariant::none ? 0.0
                                                                   : collapse_rate(plan.model, plan.particle_count());
  const double p_collapse = std::isinf(rate) ? 1.0 : -std::expm1(-rate * plan.observation_window);
  const auto topology = plan.config.topology;
  const double coherent_d2 = excitation_probabilities(eta, ExpansionMode::exact).p_odd_total;
  const double localized_d2 = topology == Topology::semi_closed ? 0.0 : d2_fraction_localized(eta);

  out << "topology: "
      << (topology == Topology::open_loop ? "open_loop" : topology == Topology::closed_loop ? "closed_loop"
                                                                                            : "semi_closed")
      << "\n";
  out << "eta: " << format_number(eta) << "\n";
  out << "foil_mass_kg: " << format_number(plan.foil.mass) << "\n";
  out << "foil_particles: " << format_number(plan.particle_count()) << "\n";
  out << "foil_ground_rms_m: " << format_number(plan.foil.ground_rms()) << "\n";
  out << "photons_per_pulse: " << plan.photons_per_pulse << "\n";
  out << "collapse_model: " << to_string(plan.model.variant) << "\n";
  out << "collapse_rate_per_s: " << format_number(rate) << "\n";
  out << "collapse_probability_per_trial: " << format_number(p_collapse) << "\n";
  out << "expected_collapses: " << format_number(p_collapse * static_cast<double>(plan.trials)) << "\n";
  out << "observed_collapses: " << tally.collapse_events << "\n";
  out << "records: " << tally.records << "\n";
  out << "unscattered: " << tally.unscattered << "\n";
  out << "d1: " << tally.d1 << "\n";
  out << "d2: " << tally.d2 << "\n";
  out << "d2_fraction: " << format_number(tally.d2_fraction) << " +- " << format_number(tally.d2_stderr) << "\n";
  out << "expected_d2_fraction_coherent: " << format_number(coherent_d2) << "\n";
  out << "expected_d2_fraction_localized: " << format_number(localized_d2) << "\n";
  out << "coherent_d1: " << tally.coherent.d1 << "\n";
  out << "coherent_d2: " << tally.coherent.d2 << "\n";
  out << "collapsed_d1: " << tally.collapsed.d1 << "\n";
  out << "collapsed_d2: " << tally.collapsed.d2 << "\n";
  if (plan.photons_per_pulse > 1) {
    out << "anomaly_threshold: " << plan.anomaly_threshold << "\n";
    out << "anomalous_pulses: " << tally.anomalous_pulses << "\n";
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symexp: symmetry-experiment simulator and feasibility calculator"};
  app.require_subcommand(1);
  CommonOptions opts;
  auto* scan_eta = app.add_subcommand("scan-eta", "R_bound and related curves as a function of eta");
  auto* scan_res = app.add_subcommand("scan-resolution", "Required energy resolution versus foil particle count");
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo single-photon or pulse experiment");
  auto* feasibility = app.add_subcommand("feasibility", "Mirror design report");
  for (auto* sub : {scan_eta, scan_res, simulate, feasibility}) add_common(sub, opts);
  simulate->add_option("--summary", opts.summary, "Also write the summary to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (scan_eta->parsed()) return cmd_scan_eta(opts, out);
    if (scan_res->parsed()) return cmd_scan_resolution(opts, out);
    if (simulate->parsed()) return cmd_simulate(opts, out, err);
    if (feasibility->parsed()) return cmd_feasibility(opts, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const PulseAssumptionError& e) {
    err << "assumption check failed: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"symexp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace symexp::cli
