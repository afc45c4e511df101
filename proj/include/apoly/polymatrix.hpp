#pragma once

#include <vector>

#include "apoly/polynomial.hpp"

namespace apoly {

/// Dense matrix of polynomials sharing one VarSet, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, VarSetPtr vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarSetPtr& varset() const { return vars_; }

  Polynomial& at(std::size_t i, std::size_t j);
  const Polynomial& at(std::size_t i, std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  VarSetPtr vars_;
  std::vector<Polynomial> entries_;
};

enum class DetAlgorithm {
  Auto,          // fraction-free for size >= 4, cofactor below
  FractionFree,  // Bareiss one-step elimination with exact divisions
  Cofactor,      // row-by-row expansion memoized on column subsets
};

/// Exact determinant of a square matrix; the 0x0 determinant is 1. The two
/// algorithms are interchangeable by contract and cross-checked in the tests.
Polynomial determinant(const PolyMatrix& m, DetAlgorithm algo = DetAlgorithm::Auto);

}  // namespace apoly
