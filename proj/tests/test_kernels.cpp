#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "apoly/kernels.hpp"

using namespace apoly;

namespace {

ExpVec random_vec(std::mt19937_64& rng, unsigned max_lane) {
  std::uniform_int_distribution<unsigned> d(0, max_lane);
  ExpVec e = ExpVec::zero();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    e.lanes[i] = static_cast<std::uint16_t>(d(rng));
  return e;
}

std::vector<const ExpVecKernels*> simd_variants() {
  std::vector<const ExpVecKernels*> v;
  if (const auto* k = avx2_kernels()) v.push_back(k);
  if (const auto* k = neon_kernels()) v.push_back(k);
  return v;
}

}  // namespace

TEST_CASE("scalar grlex order is a strict total order with degree dominance") {
  const auto& K = scalar_kernels();
  ExpVec a = ExpVec::zero(), b = ExpVec::zero();
  a.lanes[0] = 3;            // u^3
  b.lanes[1] = 4;            // v^4      higher degree wins
  CHECK(K.cmp_grlex(a, b) < 0);
  b.lanes[1] = 3;            // u^3 vs v^3: tie on degree, lane 0 decides
  CHECK(K.cmp_grlex(a, b) > 0);
  CHECK(K.cmp_grlex(a, a) == 0);
  CHECK(K.equal(a, a));
  CHECK(!K.equal(a, b));
}

TEST_CASE("scalar kernels: add / degree / contains basics") {
  const auto& K = scalar_kernels();
  ExpVec a = ExpVec::zero(), b = ExpVec::zero(), out;
  a.lanes[2] = 5;
  b.lanes[2] = 7;
  b.lanes[9] = 1;
  K.add(a, b, out);
  CHECK(out.lanes[2] == 12);
  CHECK(out.lanes[9] == 1);
  CHECK(K.total_degree(out) == 13);
  CHECK(K.contains(b, ExpVec::zero()));
  CHECK(!K.contains(a, b));
}

TEST_CASE("SIMD variants agree bit-for-bit with the scalar reference") {
  const auto variants = simd_variants();
  if (variants.empty()) {
    MESSAGE("no SIMD variant available on this machine; scalar only");
    return;
  }
  const auto& S = scalar_kernels();
  std::mt19937_64 rng(20240817);

  for (const auto* V : variants) {
    CAPTURE(V->name);
    for (int iter = 0; iter < 20000; ++iter) {
      // mix of small exponents (realistic) and large ones (edge behaviour)
      const unsigned max_lane = (iter % 7 == 0) ? 30000 : 12;
      ExpVec a = random_vec(rng, max_lane);
      ExpVec b = random_vec(rng, max_lane);
      if (iter % 5 == 0) b = a;           // exercise the equal path
      if (iter % 11 == 0) {               // tie on degree, differ in one lane
        b = a;
        if (a.lanes[3] > 0 && a.lanes[12] < 30000) {
          b.lanes[3] = static_cast<std::uint16_t>(a.lanes[3] - 1);
          b.lanes[12] = static_cast<std::uint16_t>(a.lanes[12] + 1);
        }
      }
      ExpVec so, vo;
      S.add(a, b, so);
      V->add(a, b, vo);
      CHECK(S.equal(so, vo));
      CHECK(S.cmp_grlex(a, b) == V->cmp_grlex(a, b));
      CHECK(S.cmp_grlex(b, a) == V->cmp_grlex(b, a));
      CHECK(S.equal(a, b) == V->equal(a, b));
      CHECK(S.contains(a, b) == V->contains(a, b));
      CHECK(S.total_degree(a) == V->total_degree(a));
    }

    // batched shift
    std::vector<ExpVec> src, dst_s, dst_v;
    for (int i = 0; i < 257; ++i) src.push_back(random_vec(rng, 100));
    dst_s.resize(src.size());
    dst_v.resize(src.size());
    const ExpVec shift = random_vec(rng, 50);
    S.add_shift_many(src.data(), src.size(), shift, dst_s.data());
    V->add_shift_many(src.data(), src.size(), shift, dst_v.data());
    for (std::size_t i = 0; i < src.size(); ++i)
      CHECK(S.equal(dst_s[i], dst_v[i]));
  }
}

TEST_CASE("kernel selection honours explicit names") {
  CHECK(select_kernels("scalar"));
  CHECK(active_kernels().name == std::string("scalar"));
  if (avx2_kernels()) {
    CHECK(select_kernels("avx2"));
    CHECK(active_kernels().name == std::string("avx2"));
  } else {
    CHECK(!select_kernels("avx2"));
  }
  CHECK(select_kernels("auto"));
  CHECK(!select_kernels("sse9"));
}
