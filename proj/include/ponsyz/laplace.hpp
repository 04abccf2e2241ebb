#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ponsyz/error.hpp"

namespace ponsyz {

inline constexpr std::size_t kDefaultDetSizeBound = 12;

/// Determinant over a commutative ring by Laplace expansion memoized over
/// column subsets: minor[mask] is the determinant of the leading
/// popcount(mask) rows restricted to the columns in mask. No division is
/// ever performed, so any ring with +, -, * works.
///
/// `entry(i, j)` returns the ring element at row i, column j; `one` is the
/// multiplicative identity (the 0x0 determinant).
template <class Ring, class EntryFn>
Ring laplace_det(std::size_t size, EntryFn&& entry, const Ring& one,
                 std::size_t size_bound = kDefaultDetSizeBound) {
  if (size > size_bound) throw Error(ErrorKind::InvalidArgument, "determinant size exceeds the configured bound");
  if (size == 0) return one;

  const std::uint32_t full = (std::uint32_t{1} << size) - 1;
  std::vector<std::optional<Ring>> minor(std::size_t{full} + 1);
  minor[0] = one;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!minor[mask]) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < size; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (mask & bit) continue;
      // Sign: parity of already-used columns to the right of c.
      const bool negative = (std::popcount(mask >> (c + 1)) & 1) != 0;
      Ring term = entry(row, c) * *minor[mask];
      auto& slot = minor[mask | bit];
      if (!slot) {
        slot = negative ? -term : std::move(term);
      } else if (negative) {
        *slot -= term;
      } else {
        *slot += term;
      }
    }
    // Minors of the previous layer are no longer needed once consumed.
    minor[mask].reset();
  }
  return *std::move(minor[full]);
}

}  // namespace ponsyz
