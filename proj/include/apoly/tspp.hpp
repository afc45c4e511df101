#pragma once

#include <array>
#include <functional>
#include <map>

#include "apoly/partition.hpp"
#include "apoly/polynomial.hpp"

namespace apoly {

/// Totally symmetric plane partition inside a (box,box,box)-box, stored as
/// the height matrix together with the order ideal of the fundamental
/// domain D = {(i,j,k) : 1 <= i <= j <= k <= box} it came from.
class Tspp {
 public:
  Tspp(int box, std::vector<int> matrix,
       std::vector<std::array<int, 3>> ideal);

  int box() const { return box_; }
  int at(int i, int j) const { return m_[i * box_ + j]; }
  const std::vector<std::array<int, 3>>& ideal() const { return ideal_; }
  std::vector<std::vector<int>> rows() const;

  /// 1-based cube membership: (i,j,k) stacked iff k <= T[i][j].
  bool cube(int i, int j, int k) const;

  bool is_plane_partition() const;
  /// Cube-set invariance under all six coordinate permutations.
  bool is_totally_symmetric() const;

  bool operator==(const Tspp& o) const { return box_ == o.box_ && m_ == o.m_; }

 private:
  int box_;
  std::vector<int> m_;
  std::vector<std::array<int, 3>> ideal_;
};

inline constexpr int kTsppGuard = 6;  // 4574 ideals

/// Every TSPP in the (box,box,box)-box exactly once via order ideals of the
/// fundamental domain; deterministic (smallest ideals first). Guarded at
/// box <= 6 unless extended.
void enumerate_tspps(int box, bool extended,
                     const std::function<void(const Tspp&)>& fn);

/// diag(T): conjugate of the diagonal entry sequence.
Partition tspp_diag(const Tspp& t);

/// pi(T) for T in the (n-1)-box: diag(T) = (a|b) becomes (a|b+1), reported
/// as a modified balanced partition of size n.
Partition tspp_pi(const Tspp& t, int n);

/// Which reading of the Schur-coefficient weight to use. Section4 is the
/// one consistent with the worked n=3 example and the d_lambda formula;
/// Theorem shifts the v-exponent up by the Durfee side, the known
/// off-by-one, kept so the discrepancy report can exhibit it.
enum class OmegaConvention { Section4, Theorem };

struct OmegaWeight {
  int alpha;
  int beta;
  int gamma;
  Polynomial expanded;  // u^alpha (1-u-v)^beta v^gamma over VarSet::uv()
};

/// Weight attached to a modified balanced partition of size n. Under
/// Section4, alpha + beta + gamma = C(n,2). Non-modified-balanced input is
/// a domain error (it would force a negative exponent).
OmegaWeight omega(const Partition& lambda, int n,
                  OmegaConvention conv = OmegaConvention::Section4);

/// Number of TSPPs T with pi(T) = lambda: det of binomial(b_j - 1, a_i)
/// over lambda's Frobenius coordinates; empty determinant is 1.
Int lgv_count(const Partition& lambda);

/// Counts of enumerate(n-1) binned by pi; the brute-force side of the
/// TSPP-counting proposition.
std::map<Partition, long long> histogram_by_pi(int n, bool extended = false);

}  // namespace apoly
