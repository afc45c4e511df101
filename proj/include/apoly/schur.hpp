#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "apoly/partition.hpp"
#include "apoly/polynomial.hpp"

namespace apoly {

/// s_lambda(x_1..x_n) as the bialternant det(x_i^{lambda_j+n-j}) divided by
/// prod_{i<j}(x_i - x_j). Lives over VarSet::xs(n). More than n parts is a
/// domain error (the tableau oracle returns 0 instead; the asymmetry is
/// deliberate and tested).
Polynomial schur(const Partition& lambda, int n);

/// Semistandard-tableau generating polynomial, the independent oracle for
/// schur(). Exhaustive enumeration, guarded to |lambda| <= 12 and n <= 5.
Polynomial ssyt_oracle(const Partition& lambda, int n);

/// Straightening of the generalized Schur index: s_L = 0 when two exponents
/// L_j + n - j collide, otherwise sgn(sigma) * s_lambda for the sorting
/// permutation sigma. Returns {sign, lambda} with sign in {-1, 0, +1}.
std::pair<int, Partition> schur_generalized(const std::vector<int>& L, int n);

/// Schur expansion of a symmetric polynomial: partition -> coefficient in
/// (u, v). No zero coefficients are stored.
class SchurExpansion {
 public:
  using Map = std::map<Partition, Polynomial>;

  explicit SchurExpansion(Map coeffs) : coeffs_(std::move(coeffs)) {}

  const Map& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  const Polynomial* find(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? nullptr : &it->second;
  }

  /// sum_lambda c_lambda(u,v) s_lambda(x), over VarSet::uvx(n).
  Polynomial reconstruct(int n) const;

 private:
  Map coeffs_;
};

/// Peels the graded-lex-leading x-monomial off a symmetric polynomial over
/// VarSet::uvx(n) until nothing is left. DomainError when p is not symmetric
/// in the x block.
SchurExpansion schur_expand(const Polynomial& p, int n);

/// A coefficient re-factored over the alphabet {u, 1-u-v, v}.
struct FactoredWeight {
  Int unit;
  int alpha;
  int beta;
  int gamma;
};

/// unit * u^alpha (1-u-v)^beta v^gamma when such a factorization exists
/// (verified by exact reconstruction), otherwise nullopt. Input over
/// VarSet::uv().
std::optional<FactoredWeight> factor_uwv(const Polynomial& c);

/// The monomial u^alpha (1-u-v)^beta v^gamma over VarSet::uv().
Polynomial uwv_monomial(int alpha, int beta, int gamma);

}  // namespace apoly
