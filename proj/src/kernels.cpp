#include "apoly/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace apoly {

namespace {

void scalar_add(const ExpVec& a, const ExpVec& b, ExpVec& out) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.lanes[i] = static_cast<std::uint16_t>(a.lanes[i] + b.lanes[i]);
}

void scalar_add_shift_many(const ExpVec* src, std::size_t count,
                           const ExpVec& shift, ExpVec* dst) {
  for (std::size_t i = 0; i < count; ++i) scalar_add(src[i], shift, dst[i]);
}

std::uint32_t scalar_total_degree(const ExpVec& a) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += a.lanes[i];
  return d;
}

int scalar_cmp_grlex(const ExpVec& a, const ExpVec& b) {
  const std::uint32_t da = scalar_total_degree(a);
  const std::uint32_t db = scalar_total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.lanes[i] != b.lanes[i]) return a.lanes[i] < b.lanes[i] ? -1 : 1;
  }
  return 0;
}

bool scalar_equal(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.lanes[i] != b.lanes[i]) return false;
  return true;
}

bool scalar_contains(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.lanes[i] < b.lanes[i]) return false;
  return true;
}

constexpr ExpVecKernels kScalar = {
    "scalar",         scalar_add,   scalar_add_shift_many, scalar_cmp_grlex,
    scalar_equal, scalar_contains, scalar_total_degree,
};

const ExpVecKernels* pick_auto() noexcept {
  if (const ExpVecKernels* k = avx2_kernels()) return k;
  if (const ExpVecKernels* k = neon_kernels()) return k;
  return &kScalar;
}

const ExpVecKernels* pick_named(std::string_view name) noexcept {
  if (name == "scalar") return &kScalar;
  if (name == "avx2") return avx2_kernels();
  if (name == "neon") return neon_kernels();
  if (name == "auto") return pick_auto();
  return nullptr;
}

std::atomic<const ExpVecKernels*> g_active{nullptr};

const ExpVecKernels* init_active() noexcept {
  const ExpVecKernels* k = nullptr;
  if (const char* env = std::getenv("APOLY_SIMD")) k = pick_named(env);
  if (!k) k = pick_auto();
  g_active.store(k, std::memory_order_release);
  return k;
}

}  // namespace

const ExpVecKernels& scalar_kernels() noexcept { return kScalar; }

const ExpVecKernels& active_kernels() noexcept {
  const ExpVecKernels* k = g_active.load(std::memory_order_acquire);
  if (!k) k = init_active();
  return *k;
}

bool select_kernels(std::string_view name) noexcept {
  const ExpVecKernels* k = pick_named(name);
  if (!k) return false;
  g_active.store(k, std::memory_order_release);
  return true;
}

}  // namespace apoly
