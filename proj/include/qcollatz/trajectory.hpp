// Orbit computation under step/size caps, the two closed-form expressions
// for the k-th iterate, stopping-time statistics, and the exact growth-bound
// checker (strict lower bound for every sequence; Mersenne/q=5 upper bound).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcollatz/parity.hpp"

namespace qcollatz {

inline constexpr std::size_t default_size_cap_bits = 1'000'000;

// Truncated orbit {x_0 .. x_{k-1}} of F_q with its parity vector
// (alpha^0 .. alpha^{k-1}) and max excursion. capped is set when the size
// cap cut the requested length short.
struct Trajectory {
  Multiplier q;
  std::vector<Int> iterates;
  ParityVector parity;
  Int max_value;
  bool capped = false;

  std::size_t length() const { return iterates.size(); }
  const Int& seed() const { return iterates.front(); }
  const Int& back() const { return iterates.back(); }
};

Trajectory iterate(const Multiplier& q, const CqInt& x0, std::size_t k,
                   std::size_t size_cap_bits = default_size_cap_bits);

// x_k = (q^{P_k} x0 + sum_j 2^j q^{|A|_j^{k-1}}) / 2^k with A of length k.
// Inexact division signals that A is not the parity vector of x0.
CqInt closed_form_power(const Multiplier& q, const CqInt& x0, const ParityVector& A);

// x_k = x0 (q^{P_k}/2^k) prod_{j=0}^{k-1} (1 + 1/x_j), evaluated exactly as
// a single integer quotient over the k stored iterates.
CqInt closed_form_product(const Multiplier& q, const Trajectory& traj);

struct StopInfo {
  std::optional<std::uint64_t> stopping_time;           // least k>=1 with F^k(x0) < x0
  std::optional<std::uint64_t> total_steps_to_trivial;  // least m>=1 with F^m(x0) = 2q-1
  std::uint64_t cap = 0;                                // step cap used
};

StopInfo stop_info(const Multiplier& q, const CqInt& x0, std::uint64_t step_cap);

// Exact per-prefix growth checks over a trajectory:
//   lower: F^j(x0) / x0 > (q^{mu_j}/2)^j, i.e. 2^j x_j > q^{P_j} x0, at every
//          j = 1..k (strict; holds for every sequence).
//   upper (Mersenne q with exponent p, and q=5 with 2/5): F^j/x0 <= q^{(mu_j - 1/p) j},
//          decided exactly as (x_j)^p q^j <= x0^p q^{p P_j}; violations are
//          recorded per step, never fatal.
struct BoundReport {
  std::uint64_t k = 0;  // prefixes checked (1..k)
  bool lower_ok = false;
  bool upper_checked = false;
  std::vector<std::uint64_t> upper_violations;  // step indices j with the upper bound false
};

BoundReport check_growth_bounds(const Multiplier& q, const Trajectory& traj,
                                bool with_upper = true);

}  // namespace qcollatz
