#pragma once

#include <cstdint>
#include <random>

#include "ponsyz/binform.hpp"
#include "ponsyz/exact/scalar.hpp"

namespace ponsyz {

inline constexpr std::int64_t kCoefficientBound = 100;

/// Seeded generator for reproducible samples. Integer draws use rejection
/// sampling on raw mt19937_64 output, so a given seed yields the same
/// stream with any standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  Rational coefficient(std::int64_t bound = kCoefficientBound) { return Rational(static_cast<long>(uniform(-bound, bound))); }

  BinForm form(std::size_t degree, std::int64_t bound = kCoefficientBound) {
    BinForm f(degree);
    for (std::size_t i = 0; i <= degree; ++i) f.set_coeff(i, coefficient(bound));
    return f;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ponsyz
