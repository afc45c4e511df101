#pragma once

#include <cstdint>
#include <string_view>

#include "apoly/expvec.hpp"

namespace apoly {

/// Data-parallel primitives on packed exponent vectors: the inner loops of
/// every sparse-polynomial operation (monomial product, grlex ordering,
/// merge equality). Scalar reference implementations always exist; SIMD
/// variants (AVX2, NEON) are selected at runtime and are required to be
/// bit-identical to scalar — see tests/test_kernels.cpp.
struct ExpVecKernels {
  const char* name;

  /// out = a + b, lanewise. Callers guarantee no uint16 overflow (total
  /// degrees in this project stay far below 2^16).
  void (*add)(const ExpVec& a, const ExpVec& b, ExpVec& out);

  /// dst[i] = src[i] + shift for i in [0, count). dst may alias src.
  void (*add_shift_many)(const ExpVec* src, std::size_t count,
                         const ExpVec& shift, ExpVec* dst);

  /// Graded lexicographic order: higher total degree wins, ties broken by
  /// lane 0 (first variable) downward. Returns <0, 0, >0.
  int (*cmp_grlex)(const ExpVec& a, const ExpVec& b);

  bool (*equal)(const ExpVec& a, const ExpVec& b);

  /// true iff a >= b lanewise (divisibility of monomials).
  bool (*contains)(const ExpVec& a, const ExpVec& b);

  std::uint32_t (*total_degree)(const ExpVec& a);
};

const ExpVecKernels& scalar_kernels() noexcept;

/// Null when the binary was built without the variant or the CPU lacks it.
const ExpVecKernels* avx2_kernels() noexcept;
const ExpVecKernels* neon_kernels() noexcept;

/// Kernel table in use. Picked once at first use: APOLY_SIMD=scalar|avx2|neon
/// forces a variant (falling back to scalar if unavailable), anything else
/// auto-detects the best supported one.
const ExpVecKernels& active_kernels() noexcept;

/// Force a variant by name ("scalar", "avx2", "neon", "auto"). Returns false
/// if the variant is unavailable on this machine (selection unchanged).
bool select_kernels(std::string_view name) noexcept;

}  // namespace apoly
