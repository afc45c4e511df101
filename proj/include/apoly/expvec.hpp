#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>

namespace apoly {

/// Hard cap on the number of variables in a VarSet. One exponent vector is a
/// fixed block of 16 uint16 lanes (32 bytes, one AVX2 register), so all
/// monomial arithmetic runs over full-width packed lanes; unused lanes stay 0.
inline constexpr std::size_t kMaxVars = 16;

/// Packed monomial exponent vector. Plain POD: all arithmetic and ordering
/// goes through the kernels table (see kernels.hpp).
struct alignas(32) ExpVec {
  std::uint16_t lanes[kMaxVars];

  static ExpVec zero() noexcept {
    ExpVec e;
    std::memset(e.lanes, 0, sizeof(e.lanes));
    return e;
  }
};

static_assert(sizeof(ExpVec) == 32);

/// Hash for accumulator tables. Not SIMD-dispatched; quality matters more
/// than the last nanosecond here.
struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, e.lanes, sizeof(w));
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : w) {
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebull;
      x ^= x >> 31;
      h = (h ^ x) * 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace apoly
