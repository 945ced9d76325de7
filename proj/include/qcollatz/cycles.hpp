// Everything periodic: the two exponential-Diophantine periodicity
// conditions, the g-function, congruence-class structure, cycle search by
// orbit scan and by parity-vector enumeration, Mersenne trivial cycles,
// class exclusions, and trivial-cycle classification.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcollatz/trajectory.hpp"

namespace qcollatz {

// Canonical periodic orbit: the representative rotation starts at the
// absolute minimum of the orbit. Construction validates every structural
// invariant (minimality, prime period, parity shape 1...0 with a zero tail
// from s, class decomposition n0 = h + lambda q with the h/lambda parity
// rule, gcd(P_p, p) = 1) and throws std::logic_error on violation.
class Cycle {
 public:
  static Cycle from_orbit_n(const Multiplier& q, std::vector<Int> orbit_n);

  std::uint64_t q() const { return q_; }
  const Int& min_seed_n() const { return min_seed_n_; }
  const Int& min_seed_x() const { return min_seed_x_; }
  std::uint64_t period() const { return period_; }
  std::uint64_t total_parity() const { return total_parity_; }
  std::uint64_t s() const { return s_; }  // last-one index + 1
  std::uint64_t class_h() const { return class_h_; }
  const Int& lambda() const { return lambda_; }
  const ParityVector& parity() const { return parity_; }
  Rat mu() const { return parity_.parity_coefficient(); }

  const std::vector<Int>& orbit_n() const { return orbit_n_; }
  std::vector<Int> orbit_x(const Multiplier& q) const;

 private:
  Cycle(std::uint64_t q, std::vector<Int> orbit, ParityVector parity);

  std::uint64_t q_;
  std::vector<Int> orbit_n_;  // canonical rotation, min first
  Int min_seed_n_;
  Int min_seed_x_;
  std::uint64_t period_;
  std::uint64_t total_parity_;
  std::uint64_t s_;
  std::uint64_t class_h_;
  Int lambda_;
  ParityVector parity_;
};

// g(j) = position of the (j+1)-th one scanned from the right:
// |A|_{g(j)}^{p-1} = j+1 and |A|_{g(j)+1}^{p-1} = j. Strictly decreasing.
struct GFunction {
  std::vector<std::uint64_t> values;  // g(0..P-1)
};

GFunction g_function(const ParityVector& A);

// First periodicity condition (2^p - q^{P_p}) x0 = sum_j 2^j q^{|A|_j^{p-1}}:
// returns the solving seed when D > 0, the division is exact, the quotient is
// in Z_cq and its parity vector really is A; absent otherwise.
std::optional<CqInt> first_periodicity_solve(const Multiplier& q, const ParityVector& A);

// Second periodicity condition (2^p - q^{P_p}) n0 = sum_j 2^{g(j)} q^j.
bool second_periodicity_check(const Multiplier& q, const Int& n0, const ParityVector& A);

// Solves 2^p n - q m = 2^{s-1}; h = n mod q is the admissible congruence
// class, m0 the particular solution paired with n = h. Empty only for the
// (unreachable) residual class zero.
struct CongruenceClass {
  std::uint64_t h = 0;
  Int m0;
};
std::optional<CongruenceClass> cycle_congruence_solve(const Multiplier& q, std::uint64_t p,
                                                      std::uint64_t s);

struct SearchBounds {
  std::uint64_t n_max = 0;
  std::uint64_t p_max = 0;
  std::uint64_t step_cap = 0;
  std::uint64_t size_cap_bits = 0;
};

struct SearchReport {
  std::uint64_t q = 0;
  std::string method;  // "orbit" | "parity-enum"
  SearchBounds bounds;
  std::vector<Cycle> cycles;  // canonical, sorted by min seed
  std::uint64_t scanned = 0;
  std::uint64_t undetermined = 0;         // orbits that hit a step or size cap
  std::uint64_t resolved_by_descent = 0;  // q=3 drop-below-start shortcut
  std::uint64_t pruned = 0;               // parity-enum: vectors cut by 2^p > q^P
  bool partial = false;                   // enumeration budget exceeded
  std::uint64_t next_chunk = 0;           // checkpoint cursor (chunks merged so far)

  std::uint64_t pi_count() const { return cycles.size(); }
  // associative, order-respecting merge of chunk reports
  void merge(const SearchReport& other);
};

inline constexpr std::size_t default_search_size_cap_bits = 256;

// Scans seeds n0 in [n_lo, n_hi] under T_q with exact remembered-value cycle
// detection. Orbits hitting a cap count as undetermined; for q=3 a
// drop-below-start shortcut resolves convergent seeds early.
SearchReport find_cycles_orbit_range(const Multiplier& q, std::uint64_t n_lo, std::uint64_t n_hi,
                                     std::uint64_t step_cap,
                                     std::size_t size_cap_bits = default_search_size_cap_bits);
SearchReport find_cycles_orbit(const Multiplier& q, std::uint64_t n_max, std::uint64_t step_cap,
                               std::size_t size_cap_bits = default_search_size_cap_bits);

// Enumerates parity vectors of length p with alpha^0 = 1, alpha^{p-1} = 0,
// pruned by 2^p > q^{P_p} and by repetition of a shorter period, and runs
// first_periodicity_solve on each survivor.
SearchReport find_cycles_parity_enum_length(const Multiplier& q, std::uint64_t p);
SearchReport find_cycles_parity_enum(const Multiplier& q, std::uint64_t p_max,
                                     std::uint64_t budget = default_enum_budget);

// q = 2^p - 1: the trivial cycle {1, 2^{p-1}, ..., 2} of period p, verified
// against the second periodicity condition.
Cycle mersenne_trivial_cycle(unsigned p);

// Composite q: classes h = m d (d a nontrivial divisor of q, m d <= q-1)
// carry no cycles. Enumerated form (guarded) and O(log) predicate.
std::vector<std::uint64_t> class_exclusions(const Multiplier& q);
bool class_excluded(const Multiplier& q, std::uint64_t h);

// Lemma-6 divisor condition: q | h 2^{p - g(0)} - 1.
bool divisor_condition(const Multiplier& q, const Cycle& c);

// Lemma-4 checks, decided exactly: the logarithmic-sum identity for mu_p,
// the min/max sandwich, and 0 < 2 - q^{mu_p} < 1/q.
bool parity_coeff_bounds_check(const Multiplier& q, const Cycle& c);

// Solutions of 2^p = q^P + sum_{j=0}^{P-1} 2^{g(j)} q^j over odd q <= q_max,
// p <= p_max, strictly decreasing g with g(P-1) = 0.
struct TrivialCycleSolution {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> g;
};
std::vector<TrivialCycleSolution> search_trivial_cycles(std::uint64_t P_target,
                                                        std::uint64_t q_max,
                                                        std::uint64_t p_max);

}  // namespace qcollatz
