#pragma once

#include <cstddef>
#include <cstdint>

namespace octo::regression {

// Counts that are not derived from a closed formula in this code base. Each
// was first produced by the slow oracle named beside it and is asserted by the
// test suites and by `octo search-orientations` / `octo enumerate-triangulations`.

/// Orientations of K7 whose directed 3-cycles triangulate a closed surface.
/// Oracle: scan_masks_slow over all 2^21 masks (tests/test_search_slow.cpp).
/// Consistent with 7!/21, the Paley tournament's automorphism group being
/// x -> ax + b with a a nonzero square mod 7.
inline constexpr std::size_t kSurvivorCount = 240;

/// Survivors that fall inside the deterministic 1/64 oracle sample.
/// Oracle: scan_masks_slow restricted to in_oracle_sample.
inline constexpr std::size_t kSampleSurvivorCount = 3;
inline constexpr std::size_t kSampleSize = 32768;

/// Labeled families of 14 triples covering every edge of K7 exactly twice.
/// Oracle: brute-force subset check in tests/test_triangulation_enum.cpp.
inline constexpr std::size_t kDoubleCoverCount = 120;

/// Labeled triangulations of a closed surface with 1-skeleton K7.
/// Consistent with 7!/42, the map's automorphism group being x -> ax + b.
inline constexpr std::size_t kTriangulationCount = 120;

}  // namespace octo::regression
