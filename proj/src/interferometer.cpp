#include "symexp/interferometer.hpp"

#include <cmath>
#include <string>

#include "symexp/constants.hpp"
#include "symexp/errors.hpp"

namespace symexp {

PhotonProbe PhotonProbe::from_wavelength(double wavelength_m) {
  if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m)) {
    throw DomainError("photon wavelength must be positive, got " + std::to_string(wavelength_m));
  }
  return PhotonProbe{wavelength_m};
}

double PhotonProbe::wavenumber() const noexcept { return kTwoPi / wavelength_; }

double PhotonProbe::energy() const noexcept { return constants().hbar * constants().c * wavenumber(); }

void InterferometerConfig::validate() const {
  if (mirror_transmittance != 0.0) {
    throw ValidationError("mirror transmittance must be 0: partial transmission is not modelled");
  }
}

IntensityFractions localization_intensity_ratio(double x_loc, double wavenumber) {
  if (!std::isfinite(x_loc)) throw DomainError("localization position must be finite");
  const double s = std::sin(2.0 * wavenumber * x_loc);
  const double i2 = s * s;
  return IntensityFractions{1.0 - i2, i2};
}

Suppression suppression_factor(double width, double wavelength) {
  if (!(width > 0.0 && wavelength > 0.0)) throw DomainError("suppression_factor: W and lambda must be positive");
  const double argument = 4.0 * kPi * width / wavelength;
  const double c = std::cos(argument);
  if (std::abs(c) < 1e-8) {
    throw DomainError("suppression_factor: tan^2 pole at 4 pi W / lambda = " + std::to_string(argument));
  }
  const double t = std::tan(argument);
  return Suppression{t * t, argument, argument > 1.0};
}

Detector route_photon(const InterferometerConfig& config, const ScatterOutcome& outcome, Rng& rng) {
  if (const auto* coherent = std::get_if<Coherent>(&outcome)) {
    return coherent->foil_parity == Parity::even ? Detector::D1 : Detector::D2;
  }
  const auto& localized = std::get<Localized>(outcome);
  if (config.topology == Topology::semi_closed) return Detector::D1;
  const double p_d2 = localization_intensity_ratio(localized.x_loc, config.photon.wavenumber()).i2;
  return uniform01(rng) < p_d2 ? Detector::D2 : Detector::D1;
}

}  // namespace symexp
