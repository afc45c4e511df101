// AVX2 variant of the exponent-vector kernels. Compiled with -mavx2 in this
// translation unit only; the dispatcher checks cpuid before handing out the
// table, so nothing here executes on machines without AVX2.

#include "apoly/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace apoly {
namespace {

inline __m256i load(const ExpVec& e) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(e.lanes));
}

void avx2_add(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(out.lanes),
                     _mm256_add_epi16(load(a), load(b)));
}

void avx2_add_shift_many(const ExpVec* src, std::size_t count,
                         const ExpVec& shift, ExpVec* dst) {
  const __m256i s = load(shift);
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256i r0 = _mm256_add_epi16(load(src[i]), s);
    const __m256i r1 = _mm256_add_epi16(load(src[i + 1]), s);
    _mm256_store_si256(reinterpret_cast<__m256i*>(dst[i].lanes), r0);
    _mm256_store_si256(reinterpret_cast<__m256i*>(dst[i + 1].lanes), r1);
  }
  if (i < count)
    _mm256_store_si256(reinterpret_cast<__m256i*>(dst[i].lanes),
                       _mm256_add_epi16(load(src[i]), s));
}

inline std::uint32_t hsum_epi32(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

std::uint32_t avx2_total_degree(const ExpVec& a) {
  // madd against 1s: pairwise sums of uint16 lanes fit comfortably in i32.
  return hsum_epi32(_mm256_madd_epi16(load(a), _mm256_set1_epi16(1)));
}

int avx2_cmp_grlex(const ExpVec& a, const ExpVec& b) {
  const __m256i va = load(a), vb = load(b);
  const std::uint32_t eq = static_cast<std::uint32_t>(
      _mm256_movemask_epi8(_mm256_cmpeq_epi16(va, vb)));
  if (eq == 0xffffffffu) return 0;
  const __m256i ones = _mm256_set1_epi16(1);
  const std::uint32_t da = hsum_epi32(_mm256_madd_epi16(va, ones));
  const std::uint32_t db = hsum_epi32(_mm256_madd_epi16(vb, ones));
  if (da != db) return da < db ? -1 : 1;
  // Two movemask bits per lane; first mismatching lane decides.
  const unsigned lane = static_cast<unsigned>(__builtin_ctz(~eq)) / 2;
  return a.lanes[lane] < b.lanes[lane] ? -1 : 1;
}

bool avx2_equal(const ExpVec& a, const ExpVec& b) {
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(
             _mm256_cmpeq_epi16(load(a), load(b)))) == 0xffffffffu;
}

bool avx2_contains(const ExpVec& a, const ExpVec& b) {
  // a >= b lanewise  <=>  max(a, b) == a  (unsigned).
  const __m256i va = load(a), vb = load(b);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(
             _mm256_max_epu16(va, vb), va))) == 0xffffffffu;
}

constexpr ExpVecKernels kAvx2 = {
    "avx2",     avx2_add,      avx2_add_shift_many, avx2_cmp_grlex,
    avx2_equal, avx2_contains, avx2_total_degree,
};

}  // namespace

const ExpVecKernels* avx2_kernels() noexcept {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace apoly

#else

namespace apoly {
const ExpVecKernels* avx2_kernels() noexcept { return nullptr; }
}  // namespace apoly

#endif
