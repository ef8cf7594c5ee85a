#pragma once

/**
 * @file   event_io.hpp
 * @brief  CSV export of Monte-Carlo record streams.
 *
 * Event stream columns (one record per line):
 *   trial_id,collapsed,collapse_time_s,x_loc_m,foil_level,photon_parity,detector
 * collapsed is 0/1; absent optional fields are empty; photon_parity is
 * even/odd; detector is D1, D2 or none for photons that did not scatter.
 *
 * Pulse stream columns:
 *   pulse_id,collapsed,collapse_time_s,x_loc_m,excited_level,photons,scattered,d1,d2,anomalous
 *
 * Numbers use '.' as decimal separator and the shortest round-trip form
 * (scientific notation where shorter). Lines starting with '#' are comments.
 */

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "symexp/experiment.hpp"

namespace symexp {

inline constexpr std::string_view kEventCsvHeader =
    "trial_id,collapsed,collapse_time_s,x_loc_m,foil_level,photon_parity,detector";
inline constexpr std::string_view kPulseCsvHeader =
    "pulse_id,collapsed,collapse_time_s,x_loc_m,excited_level,photons,scattered,d1,d2,anomalous";

/// Shortest decimal string that parses back to the same double; locale independent.
std::string format_number(double value);

/// 64-bit FNV-1a, stable across platforms (used for provenance headers).
std::uint64_t fnv1a64(std::string_view data) noexcept;
std::string hex64(std::uint64_t value);

/// Writes `# <line>` for every line of `comment` (if non-empty), the header and the rows.
void write_event_csv(std::ostream& out, std::span<const EventRecord> records, std::string_view comment = {});
void write_pulse_csv(std::ostream& out, std::span<const PulseRecord> pulses, std::string_view comment = {});

}  // namespace symexp
