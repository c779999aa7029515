#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace roofcalc {

/// Guardrails for the combinatorial enumerations (orbits, cosets, weight
/// multisets). Every enumeration that could blow up checks its element count
/// against `max_elements` and throws ResourceLimitError past it.
struct Limits {
  static constexpr std::size_t kDefaultCap = 10'000'000;

  std::size_t max_elements = kDefaultCap;
  /// Directory for the coset-length cache; empty disables caching.
  std::string cache_dir;

  /// Defaults overridden by the ROOFCALC_CAP environment variable when set.
  static Limits from_environment();
};

} // namespace roofcalc
