#include "apoly/polymatrix.hpp"

#include <algorithm>

#include "apoly/errors.hpp"

namespace apoly {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarSetPtr vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  if (!vars_) throw StructuralError("PolyMatrix: null VarSet");
  entries_.assign(rows_ * cols_, Polynomial(vars_));
}

Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_)
    throw StructuralError("PolyMatrix: index out of range");
  return entries_[i * cols_ + j];
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw StructuralError("PolyMatrix: index out of range");
  return entries_[i * cols_ + j];
}

namespace {

/// One-step fraction-free elimination (Bareiss). Exact divisions by the
/// previous pivot; deterministic first-non-zero row pivoting.
Polynomial det_fraction_free(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j));

  int sign = 1;
  Polynomial prev_pivot = Polynomial::constant(m.varset(), 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k;
    while (pr < n && a[pr][k].is_zero()) ++pr;
    if (pr == n) return Polynomial(m.varset());
    if (pr != k) {
      std::swap(a[pr], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev_pivot);
      }
      a[i][k] = Polynomial(m.varset());
    }
    prev_pivot = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

/// Laplace expansion over growing row prefixes, memoized on the set of used
/// columns. Level k holds det of rows 0..k-1 on each column subset of size k.
Polynomial det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  // minors keyed by column-subset bitmask
  std::vector<Polynomial> cur(1, Polynomial::constant(m.varset(), 1));
  std::vector<std::uint32_t> cur_masks(1, 0);
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<Polynomial> next;
    std::vector<std::uint32_t> next_masks;
    // enumerate subsets of size row+1 in increasing mask order
    std::vector<int> idx(row + 1);
    for (std::size_t i = 0; i <= row; ++i) idx[i] = static_cast<int>(i);
    auto mask_of = [](const std::vector<int>& v) {
      std::uint32_t msk = 0;
      for (int c : v) msk |= 1u << c;
      return msk;
    };
    auto find_prev = [&](std::uint32_t msk) -> const Polynomial& {
      auto it = std::lower_bound(cur_masks.begin(), cur_masks.end(), msk);
      return cur[static_cast<std::size_t>(it - cur_masks.begin())];
    };
    while (true) {
      const std::uint32_t msk = mask_of(idx);
      Polynomial d(m.varset());
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        const Polynomial& e = m.at(row, idx[pos]);
        if (e.is_zero()) continue;
        const Polynomial& sub = find_prev(msk & ~(1u << idx[pos]));
        if (sub.is_zero()) continue;
        Polynomial piece = e * sub;
        d = (pos % 2 == row % 2) ? d + piece : d - piece;
      }
      next_masks.push_back(msk);
      next.push_back(std::move(d));
      // next subset
      int i = static_cast<int>(idx.size()) - 1;
      while (i >= 0 && idx[i] == int(n - idx.size() + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    // masks from the combination walk arrive unsorted; sort both in lockstep
    std::vector<std::size_t> order(next.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return next_masks[x] < next_masks[y];
    });
    std::vector<Polynomial> sorted;
    std::vector<std::uint32_t> sorted_masks;
    sorted.reserve(next.size());
    for (std::size_t i : order) {
      sorted.push_back(std::move(next[i]));
      sorted_masks.push_back(next_masks[i]);
    }
    cur = std::move(sorted);
    cur_masks = std::move(sorted_masks);
  }
  return std::move(cur[0]);
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, DetAlgorithm algo) {
  if (m.rows() != m.cols())
    throw StructuralError("determinant: matrix is not square");
  if (m.rows() == 0) return Polynomial::constant(m.varset(), 1);
  if (m.rows() == 1) return m.at(0, 0);
  switch (algo) {
    case DetAlgorithm::FractionFree:
      return det_fraction_free(m);
    case DetAlgorithm::Cofactor:
      return det_cofactor(m);
    case DetAlgorithm::Auto:
    default:
      return m.rows() >= 4 ? det_fraction_free(m) : det_cofactor(m);
  }
}

}  // namespace apoly
