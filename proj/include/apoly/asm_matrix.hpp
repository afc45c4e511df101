#pragma once

#include <functional>
#include <vector>

#include "apoly/polynomial.hpp"

namespace apoly {

/// Alternating sign matrix: entries in {-1,0,1}, unit row/column sums,
/// non-zero entries alternating along every row and column.
class AsmMatrix {
 public:
  explicit AsmMatrix(int n) : n_(n), a_(n * n, 0) {}

  int size() const { return n_; }
  int at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, int v) { a_[i * n_ + j] = static_cast<signed char>(v); }

  /// Literal validator (row/column sums, alternation); the enumerator works
  /// off prefix-sum pruning instead, so this stays an independent check.
  bool is_valid() const;

  bool operator==(const AsmMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<signed char> a_;
};

struct AsmStats {
  int minus_count;  // N(A)
  int inv;
  int inv_c;
  int top_col;  // 1-based column of the unique 1 in the top row
};

/// One (top_col, minus_count, inv, inv_c) class with its multiplicity.
struct AsmClass {
  int top_col;
  int minus_count;
  int inv;
  int inv_c;
  long long count;
};

inline constexpr int kAsmGuard = 7;  // 218348 matrices

/// Every n x n ASM exactly once, in row-major lexicographic order on the
/// flattened entries with -1 < 0 < 1. Guarded at n <= 7 unless extended.
void enumerate_asms(int n, bool extended,
                    const std::function<void(const AsmMatrix&)>& fn);

/// The two double-sum inversion statistics, computed literally;
/// asserts minus_count + inv + inv_c = C(n,2).
AsmStats asm_stats(const AsmMatrix& a);

/// Classes sorted by (top_col, minus_count, inv, inv_c). threads > 1 splits
/// the search by top-row column; the merged table is identical by keying.
std::vector<AsmClass> asm_class_table(int n, bool extended = false,
                                      int threads = 1);

/// sum over ASMs of u^inv v^inv' z^(top_col - 1), over VarSet::uvz().
Polynomial asm_generating_polynomial(int n, bool extended = false,
                                     int threads = 1);

/// Monomial map u^a v^b z^c -> t^(C(n,2)-a-b) z^c realizing
/// t^C(n,2) P(1/t,1/t;z) without Laurent terms; result over VarSet::tz().
/// A monomial with a + b > C(n,2) is a domain error.
Polynomial t_reindex(const Polynomial& p, int n);

}  // namespace apoly
