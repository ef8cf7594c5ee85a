#include "symexp/feasibility.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "symexp/constants.hpp"
#include "symexp/errors.hpp"
#include "symexp/event_io.hpp"
#include "symexp/scattering.hpp"

namespace symexp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

const char* graded(double value, double pass_below, double warn_below) {
  if (value < pass_below) return "pass";
  if (value < warn_below) return "warn";
  return "fail";
}

}  // namespace

void MirrorMaterial::validate() const {
  require(refractive_index > 0.0, "material.refractive_index must be > 0");
  require(extinction_coefficient >= 0.0, "material.extinction_coefficient must be >= 0");
  require(youngs_modulus > 0.0, "material.youngs_modulus must be > 0");
  require(density > 0.0, "material.density must be > 0");
  require(poisson_ratio >= 0.0 && poisson_ratio < 0.5, "material.poisson_ratio must lie in [0, 0.5)");
  require(atomic_volume > 0.0, "material.atomic_volume must be > 0");
}

double MirrorMaterial::sound_velocity() const {
  validate();
  return std::sqrt(youngs_modulus / (density * (1.0 - poisson_ratio * poisson_ratio)));
}

MirrorMaterial MirrorMaterial::metal_xray() { return {1.0 - 1e-5, 1e-6, 2e11, 8e3, 0.3, 1.2e-29}; }

MirrorMaterial MirrorMaterial::metal_red() { return {0.3, 10.0, 2e11, 8e3, 0.3, 1.2e-29}; }

void MirrorGeometry::validate() const {
  require(thickness > 0.0, "geometry.thickness must be > 0");
  require(lateral_size > 0.0, "geometry.lateral_size must be > 0");
}

double MirrorGeometry::area() const {
  validate();
  return shape == PlateShape::rectangular_clamped ? lateral_size * lateral_size
                                                  : 0.25 * kPi * lateral_size * lateral_size;
}

double energy_resolution_required(const FoilOscillator& foil, const PhotonProbe& photon) {
  if (!(foil.omega >= 0.0)) throw DomainError("omega must be non-negative");
  return constants().hbar * foil.omega / photon.energy();
}

ResolutionCheck high_resolution_condition(const FoilOscillator& foil, const PhotonProbe& photon, double margin) {
  foil.validate();
  if (!(margin >= 1.0)) throw DomainError("margin must be >= 1");
  const double ratio = std::sqrt(constants().hbar / (foil.mass * foil.omega)) / photon.wavelength();
  return ResolutionCheck{ratio, margin, ratio >= margin};
}

double max_omega_for_resolution(double mass, double wavelength, double margin) {
  if (!(mass > 0.0 && wavelength > 0.0 && margin >= 1.0)) {
    throw DomainError("max_omega_for_resolution: need mass > 0, wavelength > 0, margin >= 1");
  }
  return constants().hbar / (mass * margin * margin * wavelength * wavelength);
}

EnergyTransfer max_energy_transfer(const PhotonProbe& photon, double mass) {
  if (!(mass > 0.0)) throw DomainError("max_energy_transfer: mass must be positive");
  const double hbar = constants().hbar;
  const double p = hbar * photon.wavenumber();
  const double energy = 2.0 * p * p / mass;
  const double spacing_bound = hbar * hbar / (mass * photon.wavelength() * photon.wavelength());
  return EnergyTransfer{energy, units::joule_to_hz(energy), energy / spacing_bound};
}

double boundary_reflectance(std::complex<double> n1, std::complex<double> n2) {
  const std::complex<double> sum = n1 + n2;
  if (std::abs(sum) == 0.0) throw DomainError("boundary_reflectance: N1 + N2 = 0");
  return std::norm((n1 - n2) / sum);
}

double absorption(const PhotonProbe& photon, const MirrorMaterial& material, double path) {
  if (!(path >= 0.0)) throw DomainError("absorption: path must be non-negative");
  if (!(material.extinction_coefficient >= 0.0)) throw DomainError("absorption: kappa must be non-negative");
  return -std::expm1(-2.0 * photon.wavenumber() * material.extinction_coefficient * path);
}

double plate_frequency(const MirrorMaterial& material, const MirrorGeometry& geometry) {
  geometry.validate();
  const double coefficient = geometry.shape == PlateShape::rectangular_clamped ? kRectangularPlateCoefficient
                                                                               : kCircularPlateCoefficient;
  return coefficient * material.sound_velocity() * geometry.thickness /
         (geometry.lateral_size * geometry.lateral_size);
}

FoilInventory foil_inventory(double particle_count, double atomic_volume, double area) {
  if (!(particle_count > 0.0)) throw ValidationError("foil_inventory: particle count must be > 0");
  if (!(atomic_volume > 0.0)) throw ValidationError("foil_inventory: atomic volume must be > 0");
  if (!(area > 0.0)) throw ValidationError("foil_inventory: area must be > 0");
  const double thickness = particle_count * atomic_volume / area;
  return FoilInventory{thickness, thickness / std::cbrt(atomic_volume)};
}

std::vector<ReportRow> feasibility_report(const FeasibilityInput& input) {
  input.material.validate();
  input.geometry.validate();
  const auto& material = input.material;
  const auto& geometry = input.geometry;
  const auto& photon = input.photon;

  std::vector<ReportRow> rows;
  const double frequency = plate_frequency(material, geometry);
  const double area = geometry.area();
  const double mass = material.density * geometry.thickness * area;
  const FoilOscillator foil{mass, units::hz_to_rad_s(frequency), 0};

  rows.push_back({"plate_frequency_hz", frequency, "-", "info"});
  const double aspect = geometry.thickness / geometry.lateral_size;
  rows.push_back({"thickness_to_size", aspect, "<= 0.01", geometry.is_thin() ? "pass" : "warn"});
  rows.push_back({"foil_mass_kg", mass, "-", "info"});
  rows.push_back({"foil_particles", foil.particle_count(), "-", "info"});
  rows.push_back({"atom_layers", geometry.thickness / std::cbrt(material.atomic_volume), "-", "info"});

  const double reflectance = boundary_reflectance(material.complex_index(), input.surrounding_index);
  rows.push_back({"boundary_reflectance", reflectance, "> 0", reflectance > 0.0 ? "pass" : "fail"});
  const double absorbed = absorption(photon, material, geometry.thickness);
  rows.push_back({"absorption", absorbed, "< 0.01 (warn < 0.5)", graded(absorbed, 0.01, 0.5)});

  const double eta = lamb_dicke(foil, KickSpec::reflection(photon.wavenumber()));
  rows.push_back({"lamb_dicke_eta", eta, "< 0.3", eta < kLambDickeWarnEta ? "pass" : "warn"});
  rows.push_back({"debye_waller", debye_waller(eta), "-", "info"});

  const ResolutionCheck resolution = high_resolution_condition(foil, photon, input.margin);
  rows.push_back({"high_resolution_ratio", resolution.ratio, ">= " + format_number(input.margin),
                  resolution.pass ? "pass" : "fail"});
  rows.push_back({"energy_resolution_required", energy_resolution_required(foil, photon), "-", "info"});

  const EnergyTransfer transfer = max_energy_transfer(photon, mass);
  rows.push_back({"max_energy_transfer_hz", transfer.frequency, "-", "info"});
  rows.push_back({"transfer_to_spacing_bound", transfer.ratio_to_spacing_bound, "8 pi^2", "info"});
  rows.push_back({"transfer_to_level_spacing", transfer.energy / (constants().hbar * foil.omega), "-", "info"});
  return rows;
}

void write_report_text(std::ostream& out, const std::vector<ReportRow>& rows) {
  for (const auto& row : rows) {
    out << std::left << std::setw(28) << row.name << std::setw(26) << format_number(row.value) << std::setw(22)
        << row.threshold << row.status << '\n';
  }
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "name,value,threshold,status\n";
  for (const auto& row : rows) {
    out << row.name << ',' << format_number(row.value) << ',' << row.threshold << ',' << row.status << '\n';
  }
}

}  // namespace symexp
