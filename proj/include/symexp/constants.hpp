#pragma once

/**
 * @file   constants.hpp
 * @brief  Physical constants and unit conversions for the whole project.
 *
 * Every numeric routine obtains hbar, c and the nucleon mass from here.
 * Internal quantities are SI throughout; the helpers in `units` convert the
 * convenience units accepted at the command-line boundary (nm, Angstrom, Hz,
 * particle counts).
 *
 * Values follow CODATA 2014 rounded to the digits listed below:
 *   hbar                 1.0545718e-34 J s
 *   c                    2.99792458e8 m/s (exact)
 *   nucleon mass         1.67262e-27 kg (proton mass)
 *   vacuum permittivity  8.854187817e-12 F/m
 */

#include <numbers>

namespace symexp {

struct PhysicalConstants {
  double hbar;                 ///< reduced Planck constant [J s]
  double c;                    ///< speed of light [m/s]
  double nucleon_mass;         ///< [kg]
  double vacuum_permittivity;  ///< [F/m]
};

inline constexpr PhysicalConstants kPhysicalConstants{
    1.0545718e-34,
    2.99792458e8,
    1.67262e-27,
    8.854187817e-12,
};

constexpr const PhysicalConstants& constants() noexcept { return kPhysicalConstants; }

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace units {

inline constexpr double kNanometre = 1e-9;
inline constexpr double kAngstrom = 1e-10;
inline constexpr double kSecondsPerYear = 365.25 * 24.0 * 3600.0;

constexpr double nm_to_m(double nm) noexcept { return nm * kNanometre; }
constexpr double m_to_nm(double m) noexcept { return m / kNanometre; }
constexpr double angstrom_to_m(double a) noexcept { return a * kAngstrom; }
constexpr double hz_to_rad_s(double f) noexcept { return kTwoPi * f; }
constexpr double rad_s_to_hz(double w) noexcept { return w / kTwoPi; }

constexpr double particles_to_kg(double count) noexcept { return count * constants().nucleon_mass; }
constexpr double kg_to_particles(double kg) noexcept { return kg / constants().nucleon_mass; }

/// Energy expressed as the equivalent frequency E / (2 pi hbar).
constexpr double joule_to_hz(double e) noexcept { return e / (kTwoPi * constants().hbar); }

}  // namespace units
}  // namespace symexp
