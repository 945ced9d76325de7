// Arbitrary-precision integer/rational aliases and small helpers used
// throughout the library. All core arithmetic is exact; doubles appear
// only in statistics reporting.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace qcollatz {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration or sampling request exceeds its configured budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_ui(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Bits in |v|; bit_length(0) == 0.
inline std::size_t bit_length(const Int& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool fits_u64(const Int& v) {
  return sgn(v) >= 0 && bit_length(v) <= 64;
}

inline std::uint64_t to_u64(const Int& v) {
  if (!fits_u64(v)) throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

// Canonicalized rational a/b.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(unsigned long num, unsigned long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qcollatz
