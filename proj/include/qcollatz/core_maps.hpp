// The three fundamental maps of the qn+1 system — T_q on positive integers,
// the conjugacy X_q, and the modified map F_q on Z_cq — plus the two parity
// predicates alpha_N and alpha_q. Everything else builds on these.
#pragma once

#include <cstdint>

#include "qcollatz/integer.hpp"
#include "qcollatz/multiplier.hpp"

namespace qcollatz {

using ParityBit = int;  // 0 or 1

// Element of Z_cq = X_q(Z+) = { x >= 2q-1 : x ≡ 1 mod 2(q-1) }.
// Membership is validated eagerly at construction; map outputs whose closure
// is proven skip the re-check via unchecked().
class CqInt {
 public:
  CqInt(const Multiplier& q, Int value) : value_(std::move(value)) {
    if (value_ < 2 * Int(q.q()) - 1 ||
        mpz_fdiv_ui(value_.get_mpz_t(), q.two_qm1()) != 1)
      throw std::domain_error("value not in Z_cq (x ≡ 1 mod 2(q-1), x >= 2q-1)");
  }

  static CqInt unchecked(Int value) { return CqInt(std::move(value), unchecked_tag{}); }

  const Int& value() const { return value_; }

  friend bool operator==(const CqInt& a, const CqInt& b) { return a.value_ == b.value_; }
  friend bool operator!=(const CqInt& a, const CqInt& b) { return a.value_ != b.value_; }
  friend bool operator<(const CqInt& a, const CqInt& b) { return a.value_ < b.value_; }

 private:
  struct unchecked_tag {};
  CqInt(Int value, unchecked_tag) : value_(std::move(value)) {}
  Int value_;
};

// T_q(n): n/2 if n even, (qn+1)/2 if n odd. Total on positive integers.
Int t_map(const Multiplier& q, const Int& n);

// Parity of n (1 = odd).
ParityBit alpha_n(const Int& n);

// Parity-type predicate on Z_cq: 1 iff x-1 ≡ 2(q-1) mod 4(q-1).
// Equals alpha_N(X_q^{-1}(x)).
ParityBit alpha_q(const Multiplier& q, const CqInt& x);

// F_q(x) = q^{alpha_q(x)} (x+1) / 2. Closed on Z_cq.
CqInt f_map(const Multiplier& q, const CqInt& x);

// X_q(n) = 2(q-1)n + 1.
CqInt conjugate(const Multiplier& q, const Int& n);

// X_q^{-1}(x) = (x-1) / (2(q-1)), exact.
Int unconjugate(const Multiplier& q, const CqInt& x);

}  // namespace qcollatz
