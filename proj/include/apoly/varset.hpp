#pragma once

#include <memory>
#include <string>
#include <vector>

#include "apoly/expvec.hpp"

namespace apoly {

/// Ordered, immutable set of variable names. The position of a name is its
/// exponent lane for the lifetime of the set.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

  /// u, v, x1..xn  (the A_n alphabet).
  static std::shared_ptr<const VarSet> uvx(int n);
  /// u, v  (Schur-expansion coefficients).
  static std::shared_ptr<const VarSet> uv();
  /// u, v, z  (refined ASM generating polynomial).
  static std::shared_ptr<const VarSet> uvz();
  /// t, z  (the reindexed table of the -1 count).
  static std::shared_ptr<const VarSet> tz();
  /// x1..xn  (plain Schur polynomials).
  static std::shared_ptr<const VarSet> xs(int n);
  /// u, v, X1..Xn  (the antisymmetrizer-to-determinant lemma).
  static std::shared_ptr<const VarSet> uvX(int n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Lane of a name, or -1.
  int find(const std::string& name) const;

  bool operator==(const VarSet& o) const { return names_ == o.names_; }
  bool operator!=(const VarSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// True when both polynomials may take part in the same arithmetic.
inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace apoly
