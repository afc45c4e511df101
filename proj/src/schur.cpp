#include "apoly/schur.hpp"

#include <algorithm>
#include <functional>

#include "apoly/kernels.hpp"
#include "apoly/polymatrix.hpp"

namespace apoly {

namespace {

std::vector<std::string> x_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

Polynomial schur(const Partition& lambda, int n) {
  if (n < 1) throw DomainError("schur: need at least one variable");
  if (lambda.num_parts() > n)
    throw DomainError("schur: more parts than variables");
  auto vs = VarSet::xs(n);
  const std::vector<int> lam = lambda.padded(n);
  PolyMatrix m(n, n, vs);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ExpVec e = ExpVec::zero();
      e.lanes[i] = static_cast<std::uint16_t>(lam[j] + n - (j + 1));
      m.at(i, j) = Polynomial::monomial(vs, e, 1);
    }
  }
  return divide_vandermonde(determinant(m), x_names(n),
                            VandermondeOrientation::EarlierMinusLater);
}

Polynomial ssyt_oracle(const Partition& lambda, int n) {
  if (n < 1) throw DomainError("ssyt_oracle: need at least one variable");
  if (lambda.sum() > 12 || n > 5)
    throw ResourceError("ssyt_oracle: tableau enumeration guard (|lambda| <= 12, n <= 5)");
  auto vs = VarSet::xs(n);
  const int rows = lambda.num_parts();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda.part(r + 1), 0);

  std::vector<Term> terms;
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ExpVec e = ExpVec::zero();
      for (const auto& row : fill)
        for (int v : row)
          e.lanes[v - 1] = static_cast<std::uint16_t>(e.lanes[v - 1] + 1);
      terms.push_back(Term{e, Int(1)});
      return;
    }
    if (c == static_cast<int>(fill[r].size())) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);                  // rows weakly increase
    if (r > 0 && c < static_cast<int>(fill[r - 1].size()))
      lo = std::max(lo, fill[r - 1][c] + 1);                       // columns strictly increase
    for (int v = lo; v <= n; ++v) {
      fill[r][c] = v;
      rec(r, c + 1);
    }
    fill[r][c] = 0;
  };
  rec(0, 0);
  return Polynomial::from_terms(vs, std::move(terms));
}

std::pair<int, Partition> schur_generalized(const std::vector<int>& L, int n) {
  if (static_cast<int>(L.size()) != n)
    throw StructuralError("schur_generalized: expected n entries");
  std::vector<int> e(n);
  for (int j = 0; j < n; ++j) {
    if (L[j] < 0) throw StructuralError("schur_generalized: negative entry");
    e[j] = L[j] + n - (j + 1);
  }
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&e](int a, int b) { return e[a] > e[b]; });
  for (int j = 0; j + 1 < n; ++j)
    if (e[order[j]] == e[order[j + 1]]) return {0, Partition()};

  int inversions = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (order[a] > order[b]) ++inversions;

  std::vector<int> lam(n);
  for (int j = 0; j < n; ++j) lam[j] = e[order[j]] - (n - (j + 1));
  return {inversions % 2 == 0 ? 1 : -1, Partition(std::move(lam))};
}

Polynomial SchurExpansion::reconstruct(int n) const {
  auto vs = VarSet::uvx(n);
  Polynomial sum(vs);
  for (const auto& [lambda, coeff] : coeffs_)
    sum = sum + coeff.embed(vs) * schur(lambda, n).embed(vs);
  return sum;
}

SchurExpansion schur_expand(const Polynomial& p, int n) {
  auto vs = VarSet::uvx(n);
  if (!same_varset(p.varset(), vs))
    throw StructuralError("schur_expand: polynomial must live over (u,v,x1..xn)");

  // symmetry check: invariance under the adjacent x transpositions
  for (int i = 0; i < n - 1; ++i) {
    std::vector<int> perm(p.varset()->size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    std::swap(perm[2 + i], perm[2 + i + 1]);
    if (p.permute_lanes(perm) != p)
      throw DomainError("schur_expand: polynomial is not symmetric in x");
  }

  // bucket the terms by x-pattern (lanes 0..n-1 of the key), coefficient in uv
  auto uv = VarSet::uv();
  auto cmp = +[](const ExpVec& a, const ExpVec& b) {
    return active_kernels().cmp_grlex(a, b) < 0;
  };
  std::map<ExpVec, Polynomial, bool (*)(const ExpVec&, const ExpVec&)> buckets(
      cmp);
  for (const auto& t : p.terms()) {
    ExpVec xpat = ExpVec::zero();
    for (int i = 0; i < n; ++i) xpat.lanes[i] = t.mono.lanes[2 + i];
    ExpVec uvm = ExpVec::zero();
    uvm.lanes[0] = t.mono.lanes[0];
    uvm.lanes[1] = t.mono.lanes[1];
    auto [it, inserted] = buckets.try_emplace(xpat, uv);
    it->second = it->second + Polynomial::monomial(uv, uvm, t.coeff);
  }

  SchurExpansion::Map result;
  while (!buckets.empty()) {
    auto top = std::prev(buckets.end());
    if (top->second.is_zero()) {
      buckets.erase(top);
      continue;
    }
    std::vector<int> lam_parts;
    for (int i = 0; i < n; ++i) {
      const int e = top->first.lanes[i];
      if (i > 0 && e > lam_parts.back())
        throw InternalError(
            "schur_expand: leading exponent pattern is not weakly decreasing");
      lam_parts.push_back(e);
    }
    const Partition lambda(std::move(lam_parts));
    const Polynomial coeff = top->second;
    result.emplace(lambda, coeff);

    const Polynomial s = schur(lambda, n);
    for (const auto& st : s.terms()) {
      ExpVec xpat = ExpVec::zero();
      for (int i = 0; i < n; ++i) xpat.lanes[i] = st.mono.lanes[i];
      auto [it, inserted] = buckets.try_emplace(xpat, uv);
      it->second = it->second - coeff * Polynomial::constant(uv, st.coeff);
      if (it->second.is_zero()) buckets.erase(it);
    }
  }
  return SchurExpansion(std::move(result));
}

Polynomial uwv_monomial(int alpha, int beta, int gamma) {
  auto uv = VarSet::uv();
  if (alpha < 0 || beta < 0 || gamma < 0)
    throw DomainError("uwv_monomial: negative exponent");
  const Polynomial u = Polynomial::variable(uv, "u");
  const Polynomial v = Polynomial::variable(uv, "v");
  const Polynomial w = Polynomial::constant(uv, 1) - u - v;
  return u.pow(alpha) * w.pow(beta) * v.pow(gamma);
}

std::optional<FactoredWeight> factor_uwv(const Polynomial& c) {
  if (!same_varset(c.varset(), VarSet::uv()))
    throw StructuralError("factor_uwv: expected a polynomial over (u,v)");
  if (c.is_zero()) return std::nullopt;
  const Term& least = c.terms().front();
  const int alpha = least.mono.lanes[0];
  const int gamma = least.mono.lanes[1];
  const int beta = static_cast<int>(c.total_degree()) - alpha - gamma;
  if (beta < 0) return std::nullopt;
  FactoredWeight f{least.coeff, alpha, beta, gamma};
  if (uwv_monomial(alpha, beta, gamma) * f.unit != c) return std::nullopt;
  return f;
}

}  // namespace apoly
