#include "qcollatz/trajectory.hpp"

namespace qcollatz {

Trajectory iterate(const Multiplier& q, const CqInt& x0, std::size_t k,
                   std::size_t size_cap_bits) {
  if (k == 0) throw std::domain_error("iterate requires k >= 1");
  if (bit_length(x0.value()) > size_cap_bits)
    throw std::domain_error("size cap below seed bit length");

  std::vector<Int> xs;
  std::vector<std::uint8_t> bits;
  xs.reserve(k);
  bits.reserve(k);

  Int max_v = x0.value();
  bool capped = false;
  CqInt x = x0;
  for (std::size_t j = 0; j < k; ++j) {
    if (bit_length(x.value()) > size_cap_bits) {
      capped = true;
      break;
    }
    if (x.value() > max_v) max_v = x.value();
    bits.push_back(static_cast<std::uint8_t>(alpha_q(q, x)));
    xs.push_back(x.value());
    if (j + 1 < k) x = f_map(q, x);
  }
  return Trajectory{q, std::move(xs), ParityVector(std::move(bits)), std::move(max_v), capped};
}

CqInt closed_form_power(const Multiplier& q, const CqInt& x0, const ParityVector& A) {
  std::size_t k = A.length();
  unsigned long P = static_cast<unsigned long>(A.total_parity());

  std::vector<Int> qpow(P + 1);
  qpow[0] = 1;
  for (unsigned long i = 1; i <= P; ++i) qpow[i] = qpow[i - 1] * q.q();

  // Horner over the polynomial sum_j 2^j q^{|A|_j^{k-1}}
  Int s = 0;
  for (std::size_t j = k; j-- > 0;) {
    s <<= 1;
    s += qpow[A.suffix_ones(j)];
  }
  Int num = qpow[P] * x0.value() + s;
  if (!mpz_divisible_2exp_p(num.get_mpz_t(), static_cast<mp_bitcnt_t>(k)))
    throw std::domain_error("closed_form_power: inexact division (A is not the parity vector of x0)");
  num >>= k;
  return CqInt(q, std::move(num));
}

CqInt closed_form_product(const Multiplier& q, const Trajectory& traj) {
  if (traj.length() == 0) throw std::domain_error("empty trajectory");
  std::size_t k = traj.length();

  Int num = traj.seed();
  Int den = 1;
  for (std::size_t j = 0; j < k; ++j) {
    num *= traj.iterates[j] + 1;
    den *= traj.iterates[j];
  }
  num *= pow_ui(Int(q.q()), static_cast<unsigned long>(traj.parity.total_parity()));
  den <<= k;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("closed_form_product: malformed trajectory");
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return CqInt(q, std::move(r));
}

StopInfo stop_info(const Multiplier& q, const CqInt& x0, std::uint64_t step_cap) {
  if (step_cap == 0) throw std::domain_error("stop_info requires step_cap >= 1");
  StopInfo info;
  info.cap = step_cap;

  const Int trivial = 2 * Int(q.q()) - 1;
  const bool seed_is_trivial = x0.value() == trivial;
  CqInt x = x0;
  for (std::uint64_t m = 1; m <= step_cap; ++m) {
    x = f_map(q, x);
    if (!info.stopping_time && x.value() < x0.value()) info.stopping_time = m;
    if (!info.total_steps_to_trivial && x.value() == trivial) info.total_steps_to_trivial = m;
    if (info.total_steps_to_trivial && (info.stopping_time || seed_is_trivial)) break;
  }
  return info;
}

BoundReport check_growth_bounds(const Multiplier& q, const Trajectory& traj, bool with_upper) {
  if (traj.length() == 0) throw std::domain_error("empty trajectory");
  const std::size_t k = traj.length();
  const Int& x0 = traj.seed();

  BoundReport rep;
  rep.k = k;
  rep.lower_ok = true;

  // upper-bound parameters: F^j/x0 <= q^{(mu_j - c/e) j}
  unsigned long e = 0, c = 0;
  if (auto p = q.mersenne_exp()) {
    e = *p;
    c = 1;
  } else if (q.q() == 5) {
    e = 5;
    c = 2;
  }
  const bool seed_trivial = x0 == 2 * Int(q.q()) - 1;
  rep.upper_checked = with_upper && e != 0 && !seed_trivial;

  Int r_low = x0;          // x0 q^{P_j}
  Int qc = 1;              // q^{c j}
  Int r_up = pow_ui(x0, e);  // x0^e q^{e P_j}
  const Int qc_step = pow_ui(Int(q.q()), c);
  const Int qe_step = pow_ui(Int(q.q()), e);

  Int xj, lhs;
  for (std::size_t j = 1; j <= k; ++j) {
    if (traj.parity.bit(j - 1)) {
      r_low *= q.q();
      if (rep.upper_checked) r_up *= qe_step;
    }
    if (rep.upper_checked) qc *= qc_step;

    if (j < k)
      xj = traj.iterates[j];
    else
      xj = f_map(q, CqInt::unchecked(traj.back())).value();

    // lower: 2^j x_j > q^{P_j} x0, strict
    lhs = xj << j;
    if (!(lhs > r_low)) rep.lower_ok = false;

    if (rep.upper_checked) {
      // upper: x_j^e q^{c j} <= x0^e q^{e P_j}
      lhs = pow_ui(xj, e) * qc;
      if (lhs > r_up) rep.upper_violations.push_back(j);
    }
  }
  return rep;
}

}  // namespace qcollatz
