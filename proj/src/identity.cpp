#include "apoly/identity.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>

#include "apoly/asm_matrix.hpp"
#include "apoly/polymatrix.hpp"
#include "term_accumulator.hpp"

namespace apoly {

namespace {

std::vector<std::string> x_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

/// prod_i x_i^{i-1} * prod_{i<j} (v + (1-u-v) x_i + u x_i x_j)
Polynomial definition_product(int n) {
  auto vs = VarSet::uvx(n);
  const Polynomial u = Polynomial::variable(vs, "u");
  const Polynomial v = Polynomial::variable(vs, "v");
  const Polynomial one = Polynomial::constant(vs, 1);
  Polynomial p = one;
  for (int i = 1; i <= n; ++i)
    p = p * Polynomial::variable(vs, "x" + std::to_string(i)).pow(i - 1);
  for (int i = 1; i <= n; ++i) {
    const Polynomial xi = Polynomial::variable(vs, "x" + std::to_string(i));
    for (int j = i + 1; j <= n; ++j) {
      const Polynomial xj = Polynomial::variable(vs, "x" + std::to_string(j));
      p = p * (v + (one - u - v) * xi + u * xi * xj);
    }
  }
  return p;
}

}  // namespace

Polynomial route_definition(int n, bool extended, DefinitionStrategy strategy) {
  if (n < 1) throw DomainError("route_definition: n must be positive");
  if (!extended && n > kDefinitionGuard)
    throw ResourceError("route_definition guarded at n <= " +
                        std::to_string(kDefinitionGuard) +
                        "; pass the extended flag to override");
  const Polynomial p = definition_product(n);
  if (strategy == DefinitionStrategy::Auto)
    strategy = n <= 5 ? DefinitionStrategy::Literal
                      : DefinitionStrategy::DividedDifference;
  if (strategy == DefinitionStrategy::Literal) {
    return divide_vandermonde(antisymmetrize(p, x_names(n)), x_names(n),
                              VandermondeOrientation::LaterMinusEarlier);
  }
  // Newton cascade along the staircase word: same quotient, but the
  // intermediates stay near the size of the answer instead of n! images.
  Polynomial f = p;
  for (int k = 2; k <= n; ++k)
    for (int i = k - 1; i >= 1; --i)
      f = divided_difference(f, "x" + std::to_string(i),
                             "x" + std::to_string(i + 1));
  // the cascade divides by prod (x_i - x_j); the definition divides by
  // prod (x_j - x_i), so flip when C(n,2) is odd
  if ((n * (n - 1) / 2) % 2) f = -f;
  return f;
}

Polynomial route_determinant(int n) {
  if (n < 1) throw DomainError("route_determinant: n must be positive");
  auto vs = VarSet::uvx(n);
  const Polynomial u = Polynomial::variable(vs, "u");
  const Polynomial v = Polynomial::variable(vs, "v");
  PolyMatrix m(n, n, vs);
  for (int i = 1; i <= n; ++i) {
    const Polynomial xi = Polynomial::variable(vs, "x" + std::to_string(i));
    const Polynomial q = Polynomial::constant(vs, -1) + u + v - u * xi;
    // (x q)^k and v^k tables
    std::vector<Polynomial> xq(n, Polynomial(vs)), vp(n, Polynomial(vs));
    xq[0] = Polynomial::constant(vs, 1);
    vp[0] = Polynomial::constant(vs, 1);
    for (int k = 1; k < n; ++k) {
      xq[k] = xq[k - 1] * (xi * q);
      vp[k] = vp[k - 1] * v;
    }
    for (int j = 1; j <= n; ++j) {
      Polynomial pj(vs);
      for (int k = 0; k <= j - 1; ++k) pj = pj + xq[k] * vp[j - 1 - k];
      m.at(i - 1, j - 1) = xi.pow(n - j) * pj;
    }
  }
  // fraction-free elimination drowns in huge exact divisions once the
  // minors reach route size; the memoized expansion never divides
  const Polynomial det =
      determinant(m, n >= 5 ? DetAlgorithm::Cofactor : DetAlgorithm::Auto);
  return divide_vandermonde(det, x_names(n),
                            VandermondeOrientation::EarlierMinusLater);
}

Polynomial route_tspp(int n, TsppMode mode, OmegaConvention conv,
                      bool extended) {
  if (n < 1) throw DomainError("route_tspp: n must be positive");
  auto vs = VarSet::uvx(n);
  std::map<Partition, Polynomial> cache;
  auto schur_of = [&](const Partition& lam) -> const Polynomial& {
    auto it = cache.find(lam);
    if (it == cache.end())
      it = cache.emplace(lam, schur(lam, n).embed(vs)).first;
    return it->second;
  };

  TermAccumulator acc(4096);
  const auto& K = active_kernels();
  auto add_weighted = [&](const Polynomial& w, const Int& mult,
                          const Polynomial& s) {
    for (const auto& wt : w.terms()) {
      const Int scaled = wt.coeff * mult;
      for (const auto& st : s.terms()) {
        ExpVec key;
        K.add(wt.mono, st.mono, key);  // u,v occupy the same lanes in uvx
        acc.add_mul(key, scaled, st.coeff);
      }
    }
  };

  if (mode == TsppMode::PerTspp) {
    enumerate_tspps(n - 1, extended, [&](const Tspp& t) {
      const Partition lam = tspp_pi(t, n);
      add_weighted(omega(lam, n, conv).expanded, 1, schur_of(lam));
    });
  } else {
    for (const Partition& lam : enumerate_modified_balanced(n)) {
      const Int mult = lgv_count(lam);
      if (mult == 0) continue;
      add_weighted(omega(lam, n, conv).expanded, mult, schur_of(lam));
    }
  }
  return acc.drain(vs);
}

Polynomial coeff_determinant(const Partition& lambda, int n) {
  if (n < 1) throw DomainError("coeff_determinant: n must be positive");
  if (lambda.num_parts() > n)
    throw DomainError("coeff_determinant: more parts than n");
  auto uv = VarSet::uv();
  const std::vector<int> lam = lambda.padded(n);
  PolyMatrix m(n, n, uv);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Polynomial entry(uv);
      for (int k = 0; k <= j - 1; ++k) {
        const int e = lam[i - 1] + j - i - k;
        if (e < 0 || e > k) continue;  // binomial(k, e) vanishes
        const Int c = binomial(k, e) * (k % 2 ? -1 : 1);
        entry = entry + uwv_monomial(e, k - e, j - 1 - k) * c;
      }
      m.at(i - 1, j - 1) = entry;
    }
  }
  return determinant(m);
}

VarSetPtr lemma_varset() {
  static const VarSetPtr vs = VarSet::make({"u", "v", "X"});
  return vs;
}

LemmaResult lemma_check(const Polynomial& f, const Polynomial& g, int n,
                        bool extended) {
  if (n < 1) throw DomainError("lemma_check: n must be positive");
  if (!extended && n > kLemmaGuard)
    throw ResourceError("lemma_check guarded at n <= " +
                        std::to_string(kLemmaGuard) +
                        "; pass the extended flag to override");
  if (!same_varset(f.varset(), lemma_varset()) ||
      !same_varset(g.varset(), lemma_varset()))
    throw StructuralError("lemma_check: f, g must live over (u, v, X)");

  auto vs = VarSet::uvX(n);
  std::vector<std::string> Xs;
  for (int i = 1; i <= n; ++i) Xs.push_back("X" + std::to_string(i));

  std::vector<Polynomial> fi, gi;
  for (int i = 0; i < n; ++i) {
    std::map<std::string, Polynomial> sub;
    sub.emplace("X", Polynomial::variable(vs, Xs[i]));
    fi.push_back(substitute(f, vs, sub));
    gi.push_back(substitute(g, vs, sub));
  }

  PolyMatrix m(n, n, vs);
  for (int i = 0; i < n; ++i) {
    Polynomial fp = Polynomial::constant(vs, 1);
    Polynomial gp = Polynomial::constant(vs, 1);
    for (int j = 1; j <= n; ++j) {
      fp = fp * fi[i];
      gp = gp * gi[i];
      m.at(i, j - 1) = fp - gp;
    }
  }
  // high-degree dense entries: expansion without divisions wins here
  const Polynomial lhs = determinant(m, DetAlgorithm::Cofactor);

  Polynomial prod = Polynomial::constant(vs, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) prod = prod * (fi[j] - gi[i]);
  const Polynomial rhs = antisymmetrize(prod, Xs);

  return LemmaResult{lhs == rhs, lhs, rhs};
}

std::string polynomial_hash(const Polynomial& p) {
  const std::string text = p.render();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

const std::vector<std::string>& route_names() {
  static const std::vector<std::string> names = {
      "definition", "determinant", "tspp_per_tspp", "tspp_per_lambda"};
  return names;
}

namespace {

std::string monomial_text(const VarSetPtr& vs, const ExpVec& mono) {
  std::string body;
  for (std::size_t i = 0; i < vs->size(); ++i) {
    const unsigned e = mono.lanes[i];
    if (e == 0) continue;
    if (!body.empty()) body += '*';
    body += vs->name(i);
    if (e > 1) {
      body += '^';
      body += std::to_string(e);
    }
  }
  return body.empty() ? "1" : body;
}

RefinedInfo run_refined_checks(const Polynomial& def, int n, bool extended,
                               int threads) {
  RefinedInfo info;
  info.ran = true;
  auto uvz = VarSet::uvz();
  std::map<std::string, Polynomial> sub;
  sub.emplace("x1", Polynomial::variable(uvz, "z"));
  for (int i = 2; i <= n; ++i)
    sub.emplace("x" + std::to_string(i), Polynomial::constant(uvz, 1));
  const Polynomial q = substitute(def, uvz, sub);
  const Polynomial gen = asm_generating_polynomial(n, extended, threads);
  info.uvz_match = (q == gen);
  if (!info.uvz_match) {
    const Polynomial diff = q - gen;
    const ExpVec& mono = diff.leading().mono;
    info.first_mismatch = {
        {int(mono.lanes[0]), int(mono.lanes[1]), int(mono.lanes[2]) + 1}};
  }
  // the -1 count table, binned directly from the statistics
  std::vector<Term> bins;
  for (const auto& cls : asm_class_table(n, extended, threads)) {
    ExpVec e = ExpVec::zero();
    e.lanes[0] = static_cast<std::uint16_t>(cls.minus_count);
    e.lanes[1] = static_cast<std::uint16_t>(cls.top_col - 1);
    bins.push_back(Term{e, Int(static_cast<long>(cls.count))});
  }
  const Polynomial by_minus =
      Polynomial::from_terms(VarSet::tz(), std::move(bins));
  info.t_match = (t_reindex(q, n) == by_minus);
  info.asm_total = gen.evaluate_all_ones();
  return info;
}

}  // namespace

VerificationReport verify_main(int n, const VerifyOptions& opts) {
  if (n < 1) throw DomainError("verify_main: n must be positive");
  if (!opts.extended && n > kVerifyGuard)
    throw ResourceError("verify_main guarded at n <= " +
                        std::to_string(kVerifyGuard) +
                        "; pass the extended flag to override");

  // canonical-order selection
  std::vector<std::string> selected;
  if (opts.routes.empty()) {
    selected = route_names();
  } else {
    for (const auto& r : opts.routes)
      if (std::find(route_names().begin(), route_names().end(), r) ==
          route_names().end())
        throw StructuralError("verify_main: unknown route '" + r + "'");
    for (const auto& r : route_names())
      if (std::find(opts.routes.begin(), opts.routes.end(), r) !=
          opts.routes.end())
        selected.push_back(r);
  }

  VerificationReport rep;
  rep.n = n;
  rep.omega = opts.omega;

  auto compute = [&](const std::string& name) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    Polynomial p = [&] {
      if (name == "definition") return route_definition(n, opts.extended);
      if (name == "determinant") return route_determinant(n);
      if (name == "tspp_per_tspp")
        return route_tspp(n, TsppMode::PerTspp, opts.omega, opts.extended);
      return route_tspp(n, TsppMode::PerLambda, opts.omega, opts.extended);
    }();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    return std::make_pair(std::move(p), static_cast<long long>(ms));
  };

  std::vector<Polynomial> polys;
  if (opts.threads > 1 && selected.size() > 1) {
    std::vector<std::future<std::pair<Polynomial, long long>>> jobs;
    for (const auto& name : selected)
      jobs.push_back(std::async(std::launch::async, compute, name));
    for (std::size_t i = 0; i < selected.size(); ++i) {
      auto [p, ms] = jobs[i].get();
      rep.routes.emplace_back(selected[i], RouteInfo{polynomial_hash(p), ms});
      polys.push_back(std::move(p));
    }
  } else {
    for (const auto& name : selected) {
      auto [p, ms] = compute(name);
      rep.routes.emplace_back(name, RouteInfo{polynomial_hash(p), ms});
      polys.push_back(std::move(p));
    }
  }

  rep.equal = true;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t j = i + 1; j < selected.size(); ++j) {
      const bool eq = polys[i] == polys[j];
      rep.pairwise.push_back(PairCheck{selected[i], selected[j], eq});
      if (!eq) rep.equal = false;
      if (!eq && !rep.first_diff) {
        const Polynomial diff = polys[i] - polys[j];
        const ExpVec& mono = diff.leading().mono;
        rep.first_diff = FirstDiff{
            selected[i], selected[j], monomial_text(polys[i].varset(), mono),
            to_string(polys[i].coefficient(mono)),
            to_string(polys[j].coefficient(mono))};
      }
    }
  }

  const auto def_pos = std::find(selected.begin(), selected.end(), "definition");
  if (def_pos != selected.end()) {
    const Polynomial& def = polys[def_pos - selected.begin()];

    const SchurExpansion expansion = schur_expand(def, n);
    rep.expansion_ran = true;
    rep.expansion_matches_cdet = true;
    rep.factored_matches_lgv = true;
    std::set<Partition> support;
    for (const auto& [lam, coeff] : expansion.coefficients()) {
      support.insert(lam);
      rep.expansion.push_back(ExpansionRow{lam, to_frobenius(lam),
                                           coeff.render(), factor_uwv(coeff),
                                           lgv_count(lam)});
      if (coeff_determinant(lam, n) != coeff) rep.expansion_matches_cdet = false;
      const auto& row = rep.expansion.back();
      if (!row.factored.has_value() || row.factored->unit != row.lgv ||
          row.lgv <= 0 ||
          row.factored->alpha + row.factored->beta + row.factored->gamma !=
              n * (n - 1) / 2)
        rep.factored_matches_lgv = false;
    }
    std::set<Partition> expected;
    for (const Partition& lam : enumerate_modified_balanced(n))
      if (lgv_count(lam) > 0) expected.insert(lam);
    rep.support_matches_lgv = (support == expected);

    if (n <= kAsmGuard || opts.extended)
      rep.refined = run_refined_checks(def, n, opts.extended, opts.threads);
  }

  rep.pass = rep.equal;
  if (rep.expansion_ran)
    rep.pass = rep.pass && rep.expansion_matches_cdet &&
               rep.support_matches_lgv && rep.factored_matches_lgv;
  if (rep.refined.ran)
    rep.pass = rep.pass && rep.refined.uvz_match && rep.refined.t_match;
  return rep;
}

VerificationReport verify_refined(int n, bool extended, int threads) {
  if (n < 1) throw DomainError("verify_refined: n must be positive");
  if (!extended && n > kAsmGuard)
    throw ResourceError("verify_refined guarded at n <= " +
                        std::to_string(kAsmGuard) +
                        "; pass the extended flag to override");
  VerificationReport rep;
  rep.n = n;
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const Polynomial def = route_definition(n, extended);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
          .count();
  rep.routes.emplace_back(
      "definition",
      RouteInfo{polynomial_hash(def), static_cast<long long>(ms)});
  rep.equal = true;  // single route, nothing to pair
  rep.refined = run_refined_checks(def, n, extended, threads);
  rep.pass = rep.refined.uvz_match && rep.refined.t_match;
  return rep;
}

}  // namespace apoly
