#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace hetnet {

/// Which interfering channels a base station folds into its leakage matrix.
enum class CoordinationStrategy {
  NoCoord,         // intracell co-users only
  FullCoord,       // intracell plus every user of every other cell
  MacroOnlyCoord,  // macro behaves as FullCoord, micros as NoCoord
  NoInterTier,     // ideal: no cross-tier links, micros coordinate among themselves
};

inline constexpr std::array<CoordinationStrategy, 4> kAllStrategies = {
    CoordinationStrategy::NoCoord, CoordinationStrategy::FullCoord,
    CoordinationStrategy::MacroOnlyCoord, CoordinationStrategy::NoInterTier};

constexpr std::string_view to_string(CoordinationStrategy s) noexcept {
  switch (s) {
    case CoordinationStrategy::NoCoord: return "no_coord";
    case CoordinationStrategy::FullCoord: return "full_coord";
    case CoordinationStrategy::MacroOnlyCoord: return "macro_only";
    case CoordinationStrategy::NoInterTier: return "no_inter_tier";
  }
  return "unknown";
}

inline std::optional<CoordinationStrategy> parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

}  // namespace hetnet
