#include "apoly/asm_matrix.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "term_accumulator.hpp"

namespace apoly {

bool AsmMatrix::is_valid() const {
  auto line_ok = [&](int k, bool row) {
    int sum = 0, last = 0;
    for (int t = 0; t < n_; ++t) {
      const int v = row ? at(k, t) : at(t, k);
      if (v < -1 || v > 1) return false;
      if (v != 0) {
        if (last != 0 && v != -last) return false;  // must alternate
        last = v;
        sum += v;
      }
    }
    return sum == 1;  // forces the line to start and end with +1
  };
  for (int k = 0; k < n_; ++k)
    if (!line_ok(k, true) || !line_ok(k, false)) return false;
  return true;
}

namespace {

void check_guard(int n, bool extended) {
  if (n < 1) throw DomainError("ASM enumeration: n must be positive");
  if (!extended && n > kAsmGuard)
    throw ResourceError("ASM enumeration guarded at n <= " +
                        std::to_string(kAsmGuard) +
                        "; pass the extended flag to override");
}

/// DFS over rows. col_sum holds the partial column sums (each in {0,1});
/// rows are generated in ascending lexicographic order (-1 < 0 < 1), which
/// makes the full stream lexicographic on the flattened matrix.
struct AsmSearch {
  int n;
  AsmMatrix work;
  std::vector<int> col_sum;
  const std::function<void(const AsmMatrix&)>& emit;

  AsmSearch(int n_, const std::function<void(const AsmMatrix&)>& fn)
      : n(n_), work(n_), col_sum(n_, 0), emit(fn) {}

  void fill_row(int r, int c, int row_prefix) {
    if (c == n) {
      if (row_prefix != 1) return;
      if (r + 1 == n) {
        emit(work);
      } else {
        rows(r + 1);
      }
      return;
    }
    const bool last_row = (r + 1 == n);
    for (int e = -1; e <= 1; ++e) {
      const int rp = row_prefix + e;
      if (rp < 0 || rp > 1) continue;
      const int cs = col_sum[c] + e;
      if (cs < 0 || cs > 1) continue;
      if (last_row && cs != 1) continue;
      work.set(r, c, e);
      col_sum[c] = cs;
      fill_row(r, c + 1, rp);
      col_sum[c] -= e;
    }
    work.set(r, c, 0);
  }

  void rows(int r) { fill_row(r, 0, 0); }
};

}  // namespace

void enumerate_asms(int n, bool extended,
                    const std::function<void(const AsmMatrix&)>& fn) {
  check_guard(n, extended);
  AsmSearch s(n, fn);
  s.rows(0);
}

AsmStats asm_stats(const AsmMatrix& a) {
  const int n = a.size();
  AsmStats st{0, 0, 0, 0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) == -1) ++st.minus_count;

  // inv  = sum over i' < i, j' <= j of a[i'][j] a[i][j']
  // inv' = sum over i' < i, j <= j' of a[i'][j] a[i][j']
  for (int i2 = 0; i2 < n; ++i2)
    for (int i = i2 + 1; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (a.at(i2, j) == 0) continue;
        for (int j2 = 0; j2 <= j; ++j2) st.inv += a.at(i2, j) * a.at(i, j2);
        for (int j2 = j; j2 < n; ++j2) st.inv_c += a.at(i2, j) * a.at(i, j2);
      }

  for (int j = 0; j < n; ++j)
    if (a.at(0, j) == 1) st.top_col = j + 1;

  if (st.minus_count + st.inv + st.inv_c != n * (n - 1) / 2)
    throw InternalError("asm_stats: N + inv + inv' != C(n,2)");
  return st;
}

namespace {

using ClassKey = std::tuple<int, int, int, int>;  // top, minus, inv, inv_c

std::map<ClassKey, long long> class_map_topcol(int n, int top_col) {
  // the first row is forced by the top column; enumerate the rest
  std::map<ClassKey, long long> out;
  std::function<void(const AsmMatrix&)> emit = [&](const AsmMatrix& a) {
    const AsmStats st = asm_stats(a);
    ++out[{st.top_col, st.minus_count, st.inv, st.inv_c}];
  };
  AsmSearch s(n, emit);
  s.work.set(0, top_col - 1, 1);
  s.col_sum[top_col - 1] = 1;
  if (n == 1) {
    emit(s.work);
  } else {
    s.rows(1);
  }
  return out;
}

std::map<ClassKey, long long> full_class_map(int n, bool extended,
                                             int threads) {
  check_guard(n, extended);
  std::map<ClassKey, long long> merged;
  if (threads <= 1) {
    enumerate_asms(n, extended, [&](const AsmMatrix& a) {
      const AsmStats st = asm_stats(a);
      ++merged[{st.top_col, st.minus_count, st.inv, st.inv_c}];
    });
    return merged;
  }
  std::vector<std::future<std::map<ClassKey, long long>>> jobs;
  for (int top = 1; top <= n; ++top)
    jobs.push_back(std::async(std::launch::async, class_map_topcol, n, top));
  for (auto& j : jobs)
    for (const auto& [k, c] : j.get()) merged[k] += c;
  return merged;
}

}  // namespace

std::vector<AsmClass> asm_class_table(int n, bool extended, int threads) {
  std::vector<AsmClass> out;
  for (const auto& [k, c] : full_class_map(n, extended, threads))
    out.push_back(AsmClass{std::get<0>(k), std::get<1>(k), std::get<2>(k),
                           std::get<3>(k), c});
  return out;
}

Polynomial asm_generating_polynomial(int n, bool extended, int threads) {
  auto vs = VarSet::uvz();
  std::vector<Term> terms;
  for (const auto& [k, c] : full_class_map(n, extended, threads)) {
    ExpVec e = ExpVec::zero();
    e.lanes[0] = static_cast<std::uint16_t>(std::get<2>(k));  // u^inv
    e.lanes[1] = static_cast<std::uint16_t>(std::get<3>(k));  // v^inv'
    e.lanes[2] = static_cast<std::uint16_t>(std::get<0>(k) - 1);  // z^(top-1)
    terms.push_back(Term{e, Int(static_cast<long>(c))});
  }
  return Polynomial::from_terms(vs, std::move(terms));
}

Polynomial t_reindex(const Polynomial& p, int n) {
  if (!same_varset(p.varset(), VarSet::uvz()))
    throw StructuralError("t_reindex: expected a polynomial over (u,v,z)");
  const int cap = n * (n - 1) / 2;
  auto tz = VarSet::tz();
  TermAccumulator acc(p.num_terms() * 2);
  for (const auto& t : p.terms()) {
    const int a = t.mono.lanes[0];
    const int b = t.mono.lanes[1];
    if (a + b > cap)
      throw DomainError(
          "t_reindex: monomial with inv + inv' exceeding C(n,2) would need a "
          "Laurent term");
    ExpVec e = ExpVec::zero();
    e.lanes[0] = static_cast<std::uint16_t>(cap - a - b);
    e.lanes[1] = t.mono.lanes[2];
    acc.add(e, t.coeff);
  }
  return acc.drain(tz);
}

}  // namespace apoly
