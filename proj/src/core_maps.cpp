#include "qcollatz/core_maps.hpp"

namespace qcollatz {

Int t_map(const Multiplier& q, const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("t_map requires n >= 1");
  Int r;
  if (mpz_odd_p(n.get_mpz_t())) {
    r = n * q.q() + 1;
    r >>= 1;
  } else {
    r = n >> 1;
  }
  return r;
}

ParityBit alpha_n(const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("alpha_n requires n >= 1");
  return mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
}

ParityBit alpha_q(const Multiplier& q, const CqInt& x) {
  // x ≡ 1 mod 2(q-1), so x mod 4(q-1) is 1 or 2(q-1)+1.
  std::uint64_t r = mpz_fdiv_ui(x.value().get_mpz_t(), q.four_qm1());
  return r == q.two_qm1() + 1 ? 1 : 0;
}

CqInt f_map(const Multiplier& q, const CqInt& x) {
  Int r = x.value() + 1;  // even: x is odd
  if (alpha_q(q, x)) r *= q.q();
  r >>= 1;
  return CqInt::unchecked(std::move(r));
}

CqInt conjugate(const Multiplier& q, const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("conjugate requires n >= 1");
  Int r = n * q.two_qm1() + 1;
  return CqInt::unchecked(std::move(r));
}

Int unconjugate(const Multiplier& q, const CqInt& x) {
  Int r = x.value() - 1;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), q.two_qm1());
  return r;
}

}  // namespace qcollatz
