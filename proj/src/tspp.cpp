#include "apoly/tspp.hpp"

#include <algorithm>

#include "apoly/schur.hpp"

namespace apoly {

Tspp::Tspp(int box, std::vector<int> matrix,
           std::vector<std::array<int, 3>> ideal)
    : box_(box), m_(std::move(matrix)), ideal_(std::move(ideal)) {
  if (box_ < 0 || static_cast<int>(m_.size()) != box_ * box_)
    throw StructuralError("Tspp: bad matrix size");
}

std::vector<std::vector<int>> Tspp::rows() const {
  std::vector<std::vector<int>> out(box_);
  for (int i = 0; i < box_; ++i)
    out[i] = std::vector<int>(m_.begin() + i * box_, m_.begin() + (i + 1) * box_);
  return out;
}

bool Tspp::cube(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1 || i > box_ || j > box_ || k > box_) return false;
  return k <= at(i - 1, j - 1);
}

bool Tspp::is_plane_partition() const {
  for (int i = 0; i < box_; ++i)
    for (int j = 0; j < box_; ++j) {
      if (at(i, j) < 0 || at(i, j) > box_) return false;
      if (i + 1 < box_ && at(i + 1, j) > at(i, j)) return false;
      if (j + 1 < box_ && at(i, j + 1) > at(i, j)) return false;
    }
  return true;
}

bool Tspp::is_totally_symmetric() const {
  for (int i = 1; i <= box_; ++i)
    for (int j = 1; j <= box_; ++j)
      for (int k = 1; k <= box_; ++k) {
        const bool in = cube(i, j, k);
        if (cube(i, k, j) != in || cube(j, i, k) != in ||
            cube(j, k, i) != in || cube(k, i, j) != in || cube(k, j, i) != in)
          return false;
      }
  return true;
}

namespace {

struct Domain {
  std::vector<std::array<int, 3>> elems;  // lex-sorted triples i<=j<=k
  std::vector<std::array<int, 3>> preds;  // indices of unit predecessors, -1 pad

  explicit Domain(int box) {
    for (int i = 1; i <= box; ++i)
      for (int j = i; j <= box; ++j)
        for (int k = j; k <= box; ++k) elems.push_back({i, j, k});
    auto index_of = [this](int i, int j, int k) {
      const std::array<int, 3> key{i, j, k};
      auto it = std::lower_bound(elems.begin(), elems.end(), key);
      return static_cast<int>(it - elems.begin());
    };
    for (const auto& e : elems) {
      std::array<int, 3> p{-1, -1, -1};
      int c = 0;
      if (e[0] - 1 >= 1) p[c++] = index_of(e[0] - 1, e[1], e[2]);
      if (e[1] - 1 >= e[0]) p[c++] = index_of(e[0], e[1] - 1, e[2]);
      if (e[2] - 1 >= e[1]) p[c++] = index_of(e[0], e[1], e[2] - 1);
      preds.push_back(p);
    }
  }
};

Tspp materialize(int box, const Domain& dom, const std::vector<char>& in) {
  std::vector<int> m(box * box, 0);
  std::vector<std::array<int, 3>> ideal;
  for (std::size_t t = 0; t < dom.elems.size(); ++t)
    if (in[t]) ideal.push_back(dom.elems[t]);
  auto member = [&](int a, int b, int c) {
    std::array<int, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    return std::binary_search(ideal.begin(), ideal.end(), s);
  };
  for (int i = 1; i <= box; ++i)
    for (int j = 1; j <= box; ++j) {
      int h = 0;
      while (h < box && member(i, j, h + 1)) ++h;
      m[(i - 1) * box + (j - 1)] = h;
    }
  return Tspp(box, std::move(m), std::move(ideal));
}

}  // namespace

void enumerate_tspps(int box, bool extended,
                     const std::function<void(const Tspp&)>& fn) {
  if (box < 0) throw DomainError("enumerate_tspps: negative box size");
  if (!extended && box > kTsppGuard)
    throw ResourceError("TSPP enumeration guarded at box <= " +
                        std::to_string(kTsppGuard) +
                        "; pass the extended flag to override");
  const Domain dom(box);
  std::vector<char> in(dom.elems.size(), 0);

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == dom.elems.size()) {
      fn(materialize(box, dom, in));
      return;
    }
    rec(pos + 1);  // exclude first: ideals stream smallest-first
    bool can = true;
    for (int p : dom.preds[pos])
      if (p >= 0 && !in[p]) {
        can = false;
        break;
      }
    if (can) {
      in[pos] = 1;
      rec(pos + 1);
      in[pos] = 0;
    }
  };
  rec(0);
}

Partition tspp_diag(const Tspp& t) {
  std::vector<int> diag;
  for (int i = 0; i < t.box(); ++i) diag.push_back(t.at(i, i));
  return Partition(std::move(diag)).conjugate();
}

Partition tspp_pi(const Tspp& t, int n) {
  if (t.box() != n - 1)
    throw StructuralError("tspp_pi: expected a TSPP in the (n-1)-box");
  const FrobeniusForm d = to_frobenius(tspp_diag(t));
  FrobeniusForm f = d;
  for (int& leg : f.legs) ++leg;
  const Partition pi = from_frobenius(f);
  if (!is_modified_balanced(pi, n))
    throw InternalError("tspp_pi: image is not modified balanced");
  return pi;
}

OmegaWeight omega(const Partition& lambda, int n, OmegaConvention conv) {
  if (!is_modified_balanced(lambda, n))
    throw DomainError("omega: partition is not modified balanced of size " +
                      std::to_string(n));
  const FrobeniusForm f = to_frobenius(lambda);
  const int l = f.size();
  int alpha = 0, beta = 0, legsum = 0;
  for (int i = 0; i < l; ++i) {
    alpha += f.arms[i] + 1;
    beta += f.legs[i] - 1 - f.arms[i];
    legsum += f.legs[i];
  }
  int gamma = n * (n - 1) / 2 - legsum;
  if (conv == OmegaConvention::Theorem) gamma += l;  // the printed v-exponent
  if (beta < 0 || gamma < 0)
    throw InternalError("omega: negative exponent for a modified balanced input");
  return OmegaWeight{alpha, beta, gamma, uwv_monomial(alpha, beta, gamma)};
}

namespace {

Int int_det(std::vector<std::vector<Int>> m) {
  const std::size_t l = m.size();
  if (l == 0) return 1;
  // fraction-free elimination over the integers
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    std::size_t pr = k;
    while (pr < l && m[pr][k] == 0) ++pr;
    if (pr == l) return 0;
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < l; ++i) {
      for (std::size_t j = k + 1; j < l; ++j) {
        Int num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[l - 1][l - 1];
}

}  // namespace

Int lgv_count(const Partition& lambda) {
  const FrobeniusForm f = to_frobenius(lambda);
  const int l = f.size();
  std::vector<std::vector<Int>> m(l, std::vector<Int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i][j] = binomial(f.legs[j] - 1, f.arms[i]);
  return int_det(std::move(m));
}

std::map<Partition, long long> histogram_by_pi(int n, bool extended) {
  if (n < 1) throw DomainError("histogram_by_pi: n must be positive");
  std::map<Partition, long long> out;
  enumerate_tspps(n - 1, extended,
                  [&](const Tspp& t) { ++out[tspp_pi(t, n)]; });
  return out;
}

}  // namespace apoly
