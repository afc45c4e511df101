#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/expvec.hpp"
#include "apoly/kernels.hpp"
#include "apoly/polynomial.hpp"

namespace apoly {

/// Open-addressing monomial -> coefficient accumulator used by the hot
/// polynomial paths (products, antisymmetrization). Linear probing over a
/// power-of-two table; coefficients accumulate in place via mpz_addmul so
/// no temporaries churn on the heap.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap * 10 < expected * 16) cap <<= 1;
    slots_.resize(cap);
    used_.assign(cap, 0);
  }

  /// coefficient(key) += c
  void add(const ExpVec& key, const Int& c) {
    Slot& s = locate(key);
    s.val += c;
  }

  /// coefficient(key) += a * b
  void add_mul(const ExpVec& key, const Int& a, const Int& b) {
    Slot& s = locate(key);
    mpz_addmul(s.val.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  /// coefficient(key) -= a * b
  void sub_mul(const ExpVec& key, const Int& a, const Int& b) {
    Slot& s = locate(key);
    mpz_submul(s.val.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  std::size_t entries() const { return count_; }

  /// Moves the surviving terms out as a normalized polynomial.
  Polynomial drain(VarSetPtr vars) {
    std::vector<Term> terms;
    terms.reserve(count_);
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (used_[i] && slots_[i].val != 0)
        terms.push_back(Term{slots_[i].key, std::move(slots_[i].val)});
    }
    const auto& K = active_kernels();
    std::sort(terms.begin(), terms.end(), [&K](const Term& a, const Term& b) {
      return K.cmp_grlex(a.mono, b.mono) < 0;
    });
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  struct Slot {
    ExpVec key;
    Int val;
  };

  Slot& locate(const ExpVec& key) {
    if (count_ * 16 >= slots_.size() * 10) grow();
    const auto& K = active_kernels();
    std::size_t mask = slots_.size() - 1;
    std::size_t i = ExpVecHash{}(key) & mask;
    while (used_[i]) {
      if (K.equal(slots_[i].key, key)) return slots_[i];
      i = (i + 1) & mask;
    }
    used_[i] = 1;
    slots_[i].key = key;
    ++count_;
    return slots_[i];
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    std::vector<unsigned char> old_used = std::move(used_);
    slots_.clear();
    slots_.resize(old.size() * 2);
    used_.assign(old.size() * 2, 0);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = 0; i < old.size(); ++i) {
      if (!old_used[i]) continue;
      std::size_t j = ExpVecHash{}(old[i].key) & mask;
      while (used_[j]) j = (j + 1) & mask;
      used_[j] = 1;
      slots_[j].key = old[i].key;
      slots_[j].val = std::move(old[i].val);
    }
  }

  std::vector<Slot> slots_;
  std::vector<unsigned char> used_;
  std::size_t count_ = 0;
};

}  // namespace apoly
