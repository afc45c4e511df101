#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apoly/partition.hpp"
#include "apoly/polynomial.hpp"
#include "apoly/schur.hpp"
#include "apoly/tspp.hpp"

namespace apoly {

inline constexpr int kDefinitionGuard = 7;  // n! antisymmetrizer images
inline constexpr int kLemmaGuard = 5;
inline constexpr int kVerifyGuard = 5;  // larger n behind the extended flag

/// How route A evaluates the defining antisymmetrizer quotient.
enum class DefinitionStrategy {
  Auto,               // literal for n <= 5, divided differences beyond
  Literal,            // antisymmetrize, then divide the full Vandermonde out
  DividedDifference,  // same quotient as a cascade of Newton operators
};

/// A_n(u,v;x) straight from the definition, over VarSet::uvx(n).
Polynomial route_definition(int n, bool extended = false,
                            DefinitionStrategy strategy = DefinitionStrategy::Auto);

/// A_n via det(x_i^{n-j} p_j(x_i)) / prod_{i<j}(x_i - x_j).
Polynomial route_determinant(int n);

enum class TsppMode { PerTspp, PerLambda };

/// A_n as the TSPP-indexed Schur sum. PerTspp walks TSPP_{n-1}; PerLambda
/// multiplies each omega by the path-count determinant and never touches a
/// plane partition.
Polynomial route_tspp(int n, TsppMode mode,
                      OmegaConvention conv = OmegaConvention::Section4,
                      bool extended = false);

/// The closed-form Schur coefficient c_lambda as an n x n determinant.
/// Vanishes whenever lambda is not modified balanced.
Polynomial coeff_determinant(const Partition& lambda, int n);

struct LemmaResult {
  bool equal;
  Polynomial lhs;  // det(f(X_i)^j - g(X_i)^j)
  Polynomial rhs;  // asym prod_{i<=j} (f(X_j) - g(X_i))
};

/// The antisymmetrizer-to-determinant identity over X_1..X_n for polynomial
/// f(X), g(X) with coefficients in (u,v). Inputs live over lemma_varset().
LemmaResult lemma_check(const Polynomial& f, const Polynomial& g, int n,
                        bool extended = false);

/// (u, v, X): the univariate home of the lemma's f and g.
VarSetPtr lemma_varset();

struct RouteInfo {
  std::string hash;    // sha-256 of the canonical rendering
  long long millis = 0;
};

struct ExpansionRow {
  Partition lambda;
  FrobeniusForm frobenius;
  std::string coefficient;  // canonical rendering over (u,v)
  std::optional<FactoredWeight> factored;
  Int lgv;
};

struct PairCheck {
  std::string left, right;
  bool equal;
};

struct FirstDiff {
  std::string left, right;     // route names
  std::string monomial;        // canonical monomial rendering
  std::string left_coefficient;
  std::string right_coefficient;
};

struct RefinedInfo {
  bool ran = false;
  bool uvz_match = false;  // full (u,v,z) table against the ASM brute force
  bool t_match = false;    // t-reindexed table against (N, top_col) bins
  Int asm_total = 0;
  std::optional<std::array<int, 3>> first_mismatch;  // (a, b, i)
};

struct VerificationReport {
  int n = 0;
  OmegaConvention omega = OmegaConvention::Section4;
  std::vector<std::pair<std::string, RouteInfo>> routes;  // computation order
  bool equal = false;
  std::vector<PairCheck> pairwise;
  std::optional<FirstDiff> first_diff;
  bool expansion_ran = false;
  std::vector<ExpansionRow> expansion;
  bool expansion_matches_cdet = false;
  bool support_matches_lgv = false;
  /// every coefficient is lgv * u^a (1-u-v)^b v^c with a+b+c = C(n,2)
  bool factored_matches_lgv = false;
  RefinedInfo refined;
  bool pass = false;
};

struct VerifyOptions {
  bool extended = false;
  OmegaConvention omega = OmegaConvention::Section4;
  std::vector<std::string> routes;  // empty = all four
  int threads = 1;
};

/// Route names accepted in VerifyOptions::routes.
const std::vector<std::string>& route_names();

/// Computes the requested routes, checks them pairwise, expands the
/// definition route into Schur coefficients against the determinant formula
/// and the LGV counts, and replays both refined ASM enumerations.
VerificationReport verify_main(int n, const VerifyOptions& opts = {});

/// Just the refined checks: specializes the definition route at
/// x = (z, 1, ..., 1), compares the full (u,v,z) table against the ASM
/// brute force, then the t-reindexed table against the (N, top_col) bins.
VerificationReport verify_refined(int n, bool extended = false,
                                  int threads = 1);

/// sha-256 hex digest of a canonical polynomial rendering.
std::string polynomial_hash(const Polynomial& p);

}  // namespace apoly
