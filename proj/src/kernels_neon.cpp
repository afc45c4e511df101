// NEON variant of the exponent-vector kernels (aarch64). A 16-lane uint16
// vector is two q registers.

#include "apoly/kernels.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)

#include <arm_neon.h>

namespace apoly {
namespace {

void neon_add(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  vst1q_u16(out.lanes, vaddq_u16(vld1q_u16(a.lanes), vld1q_u16(b.lanes)));
  vst1q_u16(out.lanes + 8,
            vaddq_u16(vld1q_u16(a.lanes + 8), vld1q_u16(b.lanes + 8)));
}

void neon_add_shift_many(const ExpVec* src, std::size_t count,
                         const ExpVec& shift, ExpVec* dst) {
  const uint16x8_t s0 = vld1q_u16(shift.lanes);
  const uint16x8_t s1 = vld1q_u16(shift.lanes + 8);
  for (std::size_t i = 0; i < count; ++i) {
    vst1q_u16(dst[i].lanes, vaddq_u16(vld1q_u16(src[i].lanes), s0));
    vst1q_u16(dst[i].lanes + 8, vaddq_u16(vld1q_u16(src[i].lanes + 8), s1));
  }
}

std::uint32_t neon_total_degree(const ExpVec& a) {
  return vaddlvq_u16(vld1q_u16(a.lanes)) + vaddlvq_u16(vld1q_u16(a.lanes + 8));
}

bool neon_equal(const ExpVec& a, const ExpVec& b) {
  const uint16x8_t e0 = vceqq_u16(vld1q_u16(a.lanes), vld1q_u16(b.lanes));
  const uint16x8_t e1 =
      vceqq_u16(vld1q_u16(a.lanes + 8), vld1q_u16(b.lanes + 8));
  return vminvq_u16(vandq_u16(e0, e1)) == 0xffff;
}

int neon_cmp_grlex(const ExpVec& a, const ExpVec& b) {
  if (neon_equal(a, b)) return 0;
  const std::uint32_t da = neon_total_degree(a);
  const std::uint32_t db = neon_total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.lanes[i] != b.lanes[i]) return a.lanes[i] < b.lanes[i] ? -1 : 1;
  }
  return 0;
}

bool neon_contains(const ExpVec& a, const ExpVec& b) {
  const uint16x8_t a0 = vld1q_u16(a.lanes), a1 = vld1q_u16(a.lanes + 8);
  const uint16x8_t b0 = vld1q_u16(b.lanes), b1 = vld1q_u16(b.lanes + 8);
  const uint16x8_t ge0 = vcgeq_u16(a0, b0);
  const uint16x8_t ge1 = vcgeq_u16(a1, b1);
  return vminvq_u16(vandq_u16(ge0, ge1)) == 0xffff;
}

constexpr ExpVecKernels kNeon = {
    "neon",     neon_add,      neon_add_shift_many, neon_cmp_grlex,
    neon_equal, neon_contains, neon_total_degree,
};

}  // namespace

const ExpVecKernels* neon_kernels() noexcept { return &kNeon; }

}  // namespace apoly

#else

namespace apoly {
const ExpVecKernels* neon_kernels() noexcept { return nullptr; }
}  // namespace apoly

#endif
