#pragma once

#include <cstddef>

namespace stableset {

/// Default ceiling for exponential enumeration.
inline constexpr std::size_t kDefaultMaxN = 12;
/// Mask-based enumeration never goes beyond this, whatever the configuration.
inline constexpr std::size_t kHardMaxN = 24;

/// kDefaultMaxN, or the value of STABLESET_MAX_N when it parses as a
/// positive integer (clamped to kHardMaxN).
std::size_t default_max_n();

/// `requested` when non-zero, default_max_n() otherwise; clamped to kHardMaxN.
std::size_t resolve_max_n(std::size_t requested);

}  // namespace stableset
