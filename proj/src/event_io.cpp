#include "symexp/event_io.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

namespace symexp {

namespace {

void write_comment(std::ostream& out, std::string_view comment) {
  if (comment.empty()) return;
  std::istringstream lines{std::string(comment)};
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

template <typename T>
void write_optional(std::ostream& out, const std::optional<T>& value) {
  if (!value) return;
  if constexpr (std::is_floating_point_v<T>) {
    out << format_number(*value);
  } else {
    out << *value;
  }
}

const char* detector_name(const std::optional<Detector>& d) {
  if (!d) return "none";
  return *d == Detector::D1 ? "D1" : "D2";
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::uint64_t fnv1a64(std::string_view data) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  std::array<char, 17> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, 16);
  std::string digits(buffer.data(), result.ptr);
  return std::string(16 - digits.size(), '0') + digits;
}

void write_event_csv(std::ostream& out, std::span<const EventRecord> records, std::string_view comment) {
  write_comment(out, comment);
  out << kEventCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.trial_id << ',' << (r.collapsed ? 1 : 0) << ',';
    write_optional(out, r.collapse_time);
    out << ',';
    write_optional(out, r.x_loc);
    out << ',';
    write_optional(out, r.foil_final_level);
    out << ',' << (r.photon_parity == Parity::even ? "even" : "odd") << ',' << detector_name(r.detector) << '\n';
  }
}

void write_pulse_csv(std::ostream& out, std::span<const PulseRecord> pulses, std::string_view comment) {
  write_comment(out, comment);
  out << kPulseCsvHeader << '\n';
  for (const auto& p : pulses) {
    out << p.pulse_id << ',' << (p.collapsed ? 1 : 0) << ',';
    write_optional(out, p.collapse_time);
    out << ',';
    write_optional(out, p.x_loc);
    out << ',';
    write_optional(out, p.excited_level);
    out << ',' << p.photons << ',' << p.scattered << ',' << p.d1 << ',' << p.d2 << ',' << (p.anomalous ? 1 : 0)
        << '\n';
  }
}

}  // namespace symexp
