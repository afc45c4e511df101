#pragma once

#include <gmpxx.h>

#include <string>

namespace apoly {

/// Every coefficient in the library is an exact arbitrary-precision integer.
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// C(n, k); zero outside 0 <= k <= n. Only needed for n >= 0 here.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace apoly
