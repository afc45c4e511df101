#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/errors.hpp"
#include "apoly/expvec.hpp"
#include "apoly/varset.hpp"

namespace apoly {

struct Term {
  ExpVec mono;
  Int coeff;
};

/// Sparse multivariate polynomial with exact integer coefficients over a
/// fixed VarSet. Terms are kept normalized: sorted ascending in graded
/// lexicographic order, pairwise distinct monomials, no zero coefficients.
/// Two polynomials are equal iff their VarSets and term lists are equal.
///
/// Values are immutable in practice: every operation returns a fresh
/// polynomial, so sharing across threads is safe.
class Polynomial {
 public:
  /// Zero polynomial.
  explicit Polynomial(VarSetPtr vars);

  static Polynomial constant(VarSetPtr vars, Int c);
  static Polynomial variable(VarSetPtr vars, const std::string& name);
  static Polynomial monomial(VarSetPtr vars, const ExpVec& mono, Int coeff);

  /// Takes an arbitrary term list, merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& varset() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Leading term in grlex order. Must not be zero.
  const Term& leading() const;

  /// Total degree of the leading term (0 for the zero polynomial).
  std::uint32_t total_degree() const;

  int degree_in(const std::string& name) const;

  Int coefficient(const ExpVec& mono) const;

  /// Sum of all coefficients, i.e. the evaluation at every variable = 1.
  Int evaluate_all_ones() const;
  /// Full integer evaluation; every variable must be assigned.
  Int evaluate(const std::map<std::string, Int>& point) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Int& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical textual rendering: terms in descending grlex order with
  /// explicit signs, e.g. "+ u^2*v - x1 + 1". Byte-stable; golden tests and
  /// the report hashes rely on it.
  std::string render() const;

  /// Same polynomial over a VarSet that contains (at least) every variable
  /// this one actually uses, matched by name.
  Polynomial embed(const VarSetPtr& target) const;

  /// sigma applied to the variables: lane i of the result receives what
  /// lane perm[i] held... precisely, new_mono[perm[i]] = old_mono[i].
  Polynomial permute_lanes(const std::vector<int>& perm) const;

 private:
  friend class TermAccumulator;
  VarSetPtr vars_;
  std::vector<Term> terms_;
};

/// Exact division failed; carries the offending remainder (an upstream
/// identity is broken if this ever escapes the routes).
class DivisibilityError : public Error {
 public:
  DivisibilityError(const std::string& what, Polynomial remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const Polynomial& remainder() const { return remainder_; }

 private:
  Polynomial remainder_;
};

/// Exact quotient p / d in the integer polynomial ring. Divisors of the
/// shape x_a - x_b take a synthetic-division fast path (the Vandermonde
/// factors of every route); anything else runs leading-term reduction.
/// Non-zero remainder throws DivisibilityError.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// Signed sum over all permutations of `vars` (names must be distinct
/// members of p's VarSet): sum_sigma sgn(sigma) p(x_sigma(1), ...).
Polynomial antisymmetrize(const Polynomial& p,
                          const std::vector<std::string>& vars);

/// Newton's divided difference (p - p|x_a<->x_b) / (x_a - x_b).
Polynomial divided_difference(const Polynomial& p, const std::string& a,
                              const std::string& b);

/// Homomorphic substitution. Every variable of p's VarSet must either have
/// an entry in `assignment` (a polynomial over `target`) or carry the same
/// name in `target`, where it maps to itself.
Polynomial substitute(const Polynomial& p, const VarSetPtr& target,
                      const std::map<std::string, Polynomial>& assignment);

/// One group of extract_coefficients: the exponent pattern over the
/// extracted variables plus the cofactor over the remaining ones.
struct CoeffGroup {
  std::vector<int> pattern;
  Polynomial coeff;
};

/// Splits p along the exponent patterns of `vars`; groups come back sorted
/// by grlex on the pattern, coefficients live over VarSet \ vars. Summing
/// pattern-monomial * coefficient reconstructs p exactly.
std::vector<CoeffGroup> extract_coefficients(const Polynomial& p,
                                             const std::vector<std::string>& vars);

/// prod_{i<j} (x_vars[j] - x_vars[i]) or the opposite orientation.
enum class VandermondeOrientation { LaterMinusEarlier, EarlierMinusLater };
Polynomial vandermonde(const VarSetPtr& vs, const std::vector<std::string>& vars,
                       VandermondeOrientation o);

/// Divides out all C(k,2) Vandermonde factors one linear binomial at a time.
Polynomial divide_vandermonde(const Polynomial& p,
                              const std::vector<std::string>& vars,
                              VandermondeOrientation o);

}  // namespace apoly
