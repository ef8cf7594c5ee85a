#pragma once

/**
 * @file   interferometer.hpp
 * @brief  Parity-eigenstate interferometer: detector routing for the three set-ups.
 *
 * The 50/50 beam splitter and the phase shifter that cancels its pi/2 phase
 * are fixed, so D1 projects on symmetric and D2 on antisymmetric photon
 * states. A foil localised at X_loc sends a plane wave of wavenumber k to
 *   I1 : I2 = cos^2(2 k X_loc) : sin^2(2 k X_loc).
 */

#include <variant>

#include "symexp/random.hpp"

namespace symexp {

class PhotonProbe {
 public:
  static PhotonProbe from_wavelength(double wavelength_m);

  double wavelength() const noexcept { return wavelength_; }
  double wavenumber() const noexcept;  ///< 2 pi / lambda
  double energy() const noexcept;      ///< hbar c k

 private:
  explicit PhotonProbe(double wavelength_m) : wavelength_(wavelength_m) {}
  double wavelength_;
};

enum class Topology { closed_loop, open_loop, semi_closed };

struct InterferometerConfig {
  Topology topology = Topology::open_loop;
  PhotonProbe photon = PhotonProbe::from_wavelength(1e-10);
  /// Kept for completeness; anything but 0 is rejected by validate().
  double mirror_transmittance = 0.0;

  void validate() const;
};

enum class Parity { even, odd };
enum class Detector { D1, D2 };

constexpr Parity parity_of_level(int n) noexcept { return n % 2 == 0 ? Parity::even : Parity::odd; }
constexpr Parity parity_seen_by(Detector d) noexcept { return d == Detector::D1 ? Parity::even : Parity::odd; }

struct IntensityFractions {
  double i1 = 0.0;  ///< D1 share
  double i2 = 0.0;  ///< D2 share
};

IntensityFractions localization_intensity_ratio(double x_loc, double wavenumber);

struct Suppression {
  double ratio = 0.0;     ///< I2 / I1 = tan^2(4 pi W / lambda)
  double argument = 0.0;  ///< 4 pi W / lambda
  /// 4 pi W / lambda > 1: the W >> lambda regime where localisation is not suppressed.
  bool unsuppressed = false;
};

/// Throws DomainError within 1e-8 (in cosine) of a tan pole, naming the argument.
Suppression suppression_factor(double width, double wavelength);

struct Coherent {
  Parity foil_parity = Parity::even;
};
struct Localized {
  double x_loc = 0.0;
};
using ScatterOutcome = std::variant<Coherent, Localized>;

/// Coherent outcomes go to D1 (even foil parity) or D2 (odd). Localised
/// outcomes reach D2 with probability sin^2(2 k X_loc) in the open and closed
/// loops; the semi-closed loop sends them to D1.
Detector route_photon(const InterferometerConfig& config, const ScatterOutcome& outcome, Rng& rng);

}  // namespace symexp
