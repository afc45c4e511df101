#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apoly/polymatrix.hpp"
#include "apoly/schur.hpp"

using namespace apoly;

namespace {

Polynomial var(const VarSetPtr& vs, const std::string& n) {
  return Polynomial::variable(vs, n);
}

/// Enumerate partitions inside a rows x cols box.
std::vector<Partition> box_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int slots, int cap) {
    if (slots == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 0; p <= cap; ++p) {
      cur.push_back(p);
      rec(slots - 1, p);
      cur.pop_back();
    }
  };
  rec(rows, cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("schur: elementary fixtures") {
  auto vs = VarSet::xs(3);
  const Polynomial x1 = var(vs, "x1"), x2 = var(vs, "x2"), x3 = var(vs, "x3");

  // s_(1,1) = e_2
  CHECK(schur(Partition({1, 1}), 3) == x1 * x2 + x1 * x3 + x2 * x3);

  // a rectangle with n rows is a power of e_n
  CHECK(schur(Partition({2, 2, 2}), 3) == (x1 * x2 * x3).pow(2));

  // empty partition
  CHECK(schur(Partition(), 3) == Polynomial::constant(vs, 1));

  // more parts than variables: bialternant rejects, oracle returns 0
  CHECK_THROWS_AS((void)schur(Partition({2, 1, 1, 1}), 3), DomainError);
  CHECK(ssyt_oracle(Partition({2, 1, 1, 1}), 3).is_zero());
}

TEST_CASE("ssyt oracle: fixtures and guard") {
  auto vs2 = VarSet::xs(2);
  CHECK(ssyt_oracle(Partition({1}), 2) == var(vs2, "x1") + var(vs2, "x2"));
  auto vs3 = VarSet::xs(3);
  CHECK(ssyt_oracle(Partition({1, 1}), 3).num_terms() == 3);
  CHECK(ssyt_oracle(Partition({1, 1}), 3) == schur(Partition({1, 1}), 3));
  CHECK_THROWS_AS((void)ssyt_oracle(Partition({5, 5, 3}), 3), ResourceError);
  CHECK_THROWS_AS((void)ssyt_oracle(Partition({1}), 6), ResourceError);
}

TEST_CASE("schur equals the tableau oracle for all shapes in a 3x3 box, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lam : box_partitions(3, 3)) {
      if (lam.num_parts() > n) continue;
      CHECK(schur(lam, n) == ssyt_oracle(lam, n));
    }
  }
}

TEST_CASE("generalized Schur straightening") {
  // L=(0,2): exponents (1,2) sort with one swap -> -s_(1,1)
  auto r = schur_generalized({0, 2}, 2);
  CHECK(r.first == -1);
  CHECK(r.second == Partition({1, 1}));

  // collision -> 0
  CHECK(schur_generalized({1, 2}, 2).first == 0);

  // already a partition -> identity
  r = schur_generalized({3, 1, 0}, 3);
  CHECK(r.first == 1);
  CHECK(r.second == Partition({3, 1}));
}

TEST_CASE("straightening agrees with the bialternant determinant") {
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<int> d(0, 4);
  for (int n = 2; n <= 3; ++n) {
    auto vs = VarSet::xs(n);
    std::vector<std::string> xn;
    for (int i = 1; i <= n; ++i) xn.push_back("x" + std::to_string(i));
    for (int rep = 0; rep < 40; ++rep) {
      std::vector<int> L(n);
      for (int j = 0; j < n; ++j) L[j] = d(rng);
      PolyMatrix m(n, n, vs);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ExpVec e = ExpVec::zero();
          e.lanes[i] = static_cast<std::uint16_t>(L[j] + n - (j + 1));
          m.at(i, j) = Polynomial::monomial(vs, e, 1);
        }
      const Polynomial det = determinant(m);
      const auto [sign, lam] = schur_generalized(L, n);
      if (sign == 0) {
        CHECK(det.is_zero());
      } else {
        Polynomial s = divide_vandermonde(
            det, xn, VandermondeOrientation::EarlierMinusLater);
        CHECK(s == schur(lam, n) * Int(sign));
      }
    }
  }
}

TEST_CASE("schur_expand: A_2 by hand") {
  auto vs = VarSet::uvx(2);
  const Polynomial p =
      var(vs, "v") + var(vs, "u") * var(vs, "x1") * var(vs, "x2");
  const SchurExpansion e = schur_expand(p, 2);
  REQUIRE(e.size() == 2);
  auto uv = VarSet::uv();
  REQUIRE(e.find(Partition()) != nullptr);
  CHECK(*e.find(Partition()) == var(uv, "v"));
  REQUIRE(e.find(Partition({1, 1})) != nullptr);
  CHECK(*e.find(Partition({1, 1})) == var(uv, "u"));
  CHECK(e.reconstruct(2) == p);
}

TEST_CASE("schur_expand: fixed point and error paths") {
  auto vs = VarSet::uvx(2);
  const Polynomial s21 = schur(Partition({2, 1}), 2).embed(vs);
  const SchurExpansion e = schur_expand(s21, 2);
  REQUIRE(e.size() == 1);
  CHECK(*e.find(Partition({2, 1})) == Polynomial::constant(VarSet::uv(), 1));

  CHECK_THROWS_AS((void)schur_expand(var(vs, "x1"), 2), DomainError);
  CHECK(schur_expand(Polynomial(vs), 2).size() == 0);
}

TEST_CASE("schur_expand roundtrip on randomized sparse expansions") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<int> coeff_deg(0, 2);
  std::uniform_int_distribution<int> coeff_val(-3, 3);
  auto uv = VarSet::uv();
  for (int n = 2; n <= 3; ++n) {
    auto vs = VarSet::uvx(n);
    const auto lams = box_partitions(n, 3);
    std::uniform_int_distribution<int> pick(0, int(lams.size()) - 1);
    for (int rep = 0; rep < 15; ++rep) {
      SchurExpansion::Map want;
      Polynomial p(vs);
      for (int k = 0; k < 3; ++k) {
        const Partition& lam = lams[pick(rng)];
        ExpVec e = ExpVec::zero();
        e.lanes[0] = static_cast<std::uint16_t>(coeff_deg(rng));
        e.lanes[1] = static_cast<std::uint16_t>(coeff_deg(rng));
        const Polynomial c = Polynomial::monomial(uv, e, coeff_val(rng));
        if (c.is_zero() || want.count(lam)) continue;
        want.emplace(lam, c);
        p = p + c.embed(vs) * schur(lam, n).embed(vs);
      }
      // drop entries that cancelled to zero when building `want`
      const SchurExpansion got = schur_expand(p, n);
      REQUIRE(got.size() == want.size());
      for (const auto& [lam, c] : want) {
        REQUIRE(got.find(lam) != nullptr);
        CHECK(*got.find(lam) == c);
      }
      CHECK(got.reconstruct(n) == p);
    }
  }
}

TEST_CASE("factor_uwv recognizes the omega alphabet") {
  auto uv = VarSet::uv();
  const Polynomial u = var(uv, "u"), v = var(uv, "v");

  auto f = factor_uwv(u * u * v);
  REQUIRE(f.has_value());
  CHECK(f->unit == 1);
  CHECK(f->alpha == 2);
  CHECK(f->beta == 0);
  CHECK(f->gamma == 1);

  const Polynomial w = Polynomial::constant(uv, 1) - u - v;
  f = factor_uwv(u * w * v);
  REQUIRE(f.has_value());
  CHECK(f->unit == 1);
  CHECK(f->alpha == 1);
  CHECK(f->beta == 1);
  CHECK(f->gamma == 1);

  f = factor_uwv(u * w.pow(2) * v.pow(3) * Int(4));
  REQUIRE(f.has_value());
  CHECK(f->unit == 4);
  CHECK(f->alpha == 1);
  CHECK(f->beta == 2);
  CHECK(f->gamma == 3);

  CHECK(!factor_uwv(u + v).has_value());
  CHECK(!factor_uwv(u * v + Polynomial::constant(uv, 1)).has_value());
  CHECK(!factor_uwv(Polynomial(uv)).has_value());
}
