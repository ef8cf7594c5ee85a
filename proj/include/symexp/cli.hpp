#pragma once

/**
 * @file   cli.hpp
 * @brief  Subcommands of the `symexp` tool, callable in-process.
 *
 * Exit codes: 0 success, 1 validation/usage error, 2 failed assumption
 * check, 3 I/O error.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symexp/config.hpp"
#include "symexp/experiment.hpp"
#include "symexp/feasibility.hpp"

namespace symexp::cli {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitAssumption = 2, kExitIo = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience overload for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ScanEtaSpec {
  double eta_min = 0.01;
  double eta_max = 3.0;
  int steps = 300;
  bool log_spacing = true;
};

struct ScanResolutionSpec {
  double particles_min = 1e4;
  double particles_max = 1e20;
  int steps = 65;
  std::vector<double> wavelengths{1e-10, 1e-6};  ///< m
  double margin = kDefaultMargin;
};

ScanEtaSpec scan_eta_spec(const Config& config);
ScanResolutionSpec scan_resolution_spec(const Config& config);
ExperimentPlan plan_from_config(const Config& config);
FeasibilityInput feasibility_from_config(const Config& config);

/// Grid points of a scan; log spacing is geometric.
std::vector<double> scan_grid(double lo, double hi, int steps, bool log_spacing);

/// CSV columns: eta,r_bound,r_qualitative,p00,p_odd_exact,d2_fraction_localized.
void write_scan_eta(std::ostream& out, const ScanEtaSpec& spec, std::string_view comment);
/// CSV columns: particles,mass_kg,wavelength_nm,omega_max_rad_s,m_omega_max,energy_resolution.
void write_scan_resolution(std::ostream& out, const ScanResolutionSpec& spec, std::string_view comment);

void write_simulation_summary(std::ostream& out, const ExperimentRunner& runner, const DetectorTally& tally);

}  // namespace symexp::cli
