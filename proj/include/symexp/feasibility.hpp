#pragma once

/**
 * @file   feasibility.hpp
 * @brief  Closed-form design checks for the mirror foil and the probing light.
 *
 * "Much smaller / much larger" conditions are evaluated against a margin
 * factor (default 10) and always reported with the computed ratio.
 * Reflectance is the single-boundary Fresnel value at normal incidence;
 * interference between the two faces of the foil is not included.
 */

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "symexp/interferometer.hpp"
#include "symexp/oscillator.hpp"

namespace symexp {

struct MirrorMaterial {
  double refractive_index = 1.0;        ///< n
  double extinction_coefficient = 0.0;  ///< kappa
  double youngs_modulus = 0.0;          ///< Pa
  double density = 0.0;                 ///< kg/m^3
  double poisson_ratio = 0.0;
  double atomic_volume = 0.0;  ///< m^3 per atom

  void validate() const;
  std::complex<double> complex_index() const { return {refractive_index, extinction_coefficient}; }
  /// C_L = sqrt(E / (rho (1 - nu^2))).
  double sound_velocity() const;

  /// Generic metal (E = 2e11 Pa, rho = 8e3 kg/m^3, nu = 0.3) with an x-ray
  /// index n = 1 - 1e-5, kappa = 1e-6.
  static MirrorMaterial metal_xray();
  /// Same metal in the red: n = 0.3, kappa = 10.
  static MirrorMaterial metal_red();
};

enum class PlateShape { rectangular_clamped, circular_clamped };

struct MirrorGeometry {
  double thickness = 0.0;     ///< h [m]
  double lateral_size = 0.0;  ///< L [m]: side of the square plate or diameter of the disc
  PlateShape shape = PlateShape::rectangular_clamped;

  void validate() const;
  /// h / L <= 0.01.
  bool is_thin() const { return thickness / lateral_size <= 0.01; }
  double area() const;
};

inline constexpr double kRectangularPlateCoefficient = 1.654;
inline constexpr double kCircularPlateCoefficient = 0.4694;
inline constexpr double kDefaultMargin = 10.0;

/// hbar omega / E_gamma.
double energy_resolution_required(const FoilOscillator& foil, const PhotonProbe& photon);

struct ResolutionCheck {
  double ratio = 0.0;  ///< sqrt(hbar / (m omega)) / lambda
  double margin = kDefaultMargin;
  bool pass = false;  ///< ratio >= margin
};

ResolutionCheck high_resolution_condition(const FoilOscillator& foil, const PhotonProbe& photon,
                                          double margin = kDefaultMargin);

/// Largest omega with sqrt(hbar / (m omega)) >= margin * lambda: hbar / (m margin^2 lambda^2).
double max_omega_for_resolution(double mass, double wavelength, double margin = kDefaultMargin);

struct EnergyTransfer {
  double energy = 0.0;                  ///< 2 (hbar k)^2 / m [J]
  double frequency = 0.0;               ///< energy / (2 pi hbar) [Hz]
  double ratio_to_spacing_bound = 0.0;  ///< energy / (hbar^2 / (m lambda^2)); 8 pi^2 for all inputs
};

EnergyTransfer max_energy_transfer(const PhotonProbe& photon, double mass);

/// |(N1 - N2) / (N1 + N2)|^2 at normal incidence.
double boundary_reflectance(std::complex<double> n1, std::complex<double> n2);

/// 1 - exp(-2 k kappa path).
double absorption(const PhotonProbe& photon, const MirrorMaterial& material, double path);

/// coefficient * C_L * h / L^2 with 1.654 (rectangular) or 0.4694 (circular).
double plate_frequency(const MirrorMaterial& material, const MirrorGeometry& geometry);

struct FoilInventory {
  double thickness = 0.0;  ///< m
  double layers = 0.0;     ///< thickness / cbrt(atomic_volume)
};

FoilInventory foil_inventory(double particle_count, double atomic_volume, double area);

struct ReportRow {
  std::string name;
  double value = 0.0;
  std::string threshold;
  std::string status;  ///< pass, warn, fail or info
};

struct FeasibilityInput {
  MirrorMaterial material;
  MirrorGeometry geometry;
  PhotonProbe photon = PhotonProbe::from_wavelength(1e-10);
  std::complex<double> surrounding_index{1.0, 0.0};
  double margin = kDefaultMargin;
};

/// One row per checked quantity. The foil oscillator is the plate itself:
/// mass rho h A and omega = 2 pi plate_frequency.
std::vector<ReportRow> feasibility_report(const FeasibilityInput& input);

void write_report_text(std::ostream& out, const std::vector<ReportRow>& rows);
/// Header name,value,threshold,status.
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace symexp
