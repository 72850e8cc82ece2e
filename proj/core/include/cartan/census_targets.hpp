#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

// Published census values the enumerator is checked against. Keep these in
// one place: if the enumeration disagrees, the diff against this file is the
// result to report.

namespace cartan::targets {

inline constexpr std::size_t hyperbolic_sym = 142;
inline constexpr std::size_t hyperbolic_nonsym = 96;
inline constexpr std::size_t hyperbolic_total = 238;

inline constexpr std::size_t superizable_sym = 66;
inline constexpr std::size_t superizable_nonsym = 30;
inline constexpr std::size_t multi_superizable_sym = 18;
inline constexpr std::size_t multi_superizable_nonsym = 3;

inline constexpr std::size_t super_sym = 97;
inline constexpr std::size_t super_nonsym = 36;

/// H-classes with several superizations, symmetrizable table.
inline constexpr std::array<std::pair<std::string_view, std::size_t>, 18> multi_sym{{
    {"H3_27", 2},  {"H3_87", 2},  {"H3_93", 3},  {"H3_98", 3},  {"H3_108", 3}, {"H3_113", 5},
    {"H3_115", 3}, {"H3_117", 3}, {"H3_120", 3}, {"H3_123", 2}, {"H4_5", 3},   {"H4_16", 3},
    {"H4_24", 2},  {"H4_44", 2},  {"H4_45", 2},  {"H4_46", 3},  {"H5_22", 3},  {"H6_9", 2},
}};

/// Same for the non-symmetrizable table.
inline constexpr std::array<std::pair<std::string_view, std::size_t>, 3> multi_nonsym{{
    {"NH3_25", 3}, {"NH3_29", 3}, {"NH3_85", 3},
}};

}  // namespace cartan::targets
