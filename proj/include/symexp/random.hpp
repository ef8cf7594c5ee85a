#pragma once

#include <cstdint>
#include <random>

namespace symexp {

using Rng = std::mt19937_64;

/// splitmix64 finaliser; decorrelates neighbouring seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Generator for one independent stream (a trial, a pulse, a worker).
/// Depends only on (master_seed, stream_id), never on scheduling.
inline Rng make_stream_rng(std::uint64_t master_seed, std::uint64_t stream_id) {
  return Rng{mix64(mix64(master_seed) ^ mix64(stream_id + 0x632be59bd9b4e019ULL))};
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace symexp
