// Probabilistic model of the parity coefficient: the exact binomial law of
// M_k, its moments, the Chebyshev divergence bound, empirical histograms,
// density estimation against the ln2/ln q threshold, and equiparity traces.
// Core comparisons are exact; doubles appear only in reported figures.
#pragma once

#include <cstdint>
#include <vector>

#include "qcollatz/parity.hpp"

namespace qcollatz {

// P(M_k = m/k) = C(k, m) / 2^k, exact.
Rat binomial_pmf(std::uint64_t k, std::uint64_t m);

struct Moments {
  Rat mean;   // exactly 1/2
  double sd;  // 1 / (2 sqrt(k))
};
Moments mk_moments(std::uint64_t k);

// Lower bound for P(M_k > ln2/ln q), q >= 5:
// 1 - ln^2 q / (k (2 ln^2 q - 8 ln2 (ln q - ln2))). May be negative
// (vacuous) for small k.
double chebyshev_divergence_bound(const Multiplier& q, std::uint64_t k);

// Counter-based deterministic generator for sampled statistics:
// word(i) = splitmix64_mix(seed + (i+1) * 0x9E3779B97F4A7C15). A pure
// function of (seed, index), so results do not depend on chunking or
// worker count.
std::uint64_t rng_word(std::uint64_t seed, std::uint64_t index);

struct MuHistogram {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  bool exhaustive = false;
  std::uint64_t total = 0;
  std::uint64_t rng_seed = 0;               // sampled mode only
  std::vector<std::uint64_t> counts;        // index m in [0, k]
};

// Exhaustive histogram of P_k over n0 in [1, 2^k]; must equal C(k, m).
MuHistogram mu_distribution_exhaustive(const Multiplier& q, unsigned k,
                                       std::uint64_t budget = default_enum_budget);
// Sampled histogram over uniform n0 in [1, 2^k]; generator seed recorded.
MuHistogram mu_distribution_sampled(const Multiplier& q, unsigned k, std::uint64_t samples,
                                    std::uint64_t rng_seed);
// Chunk of the sampled histogram (sample indices [lo, hi)); deterministic
// merge by addition.
MuHistogram mu_distribution_sampled_range(const Multiplier& q, unsigned k, std::uint64_t lo,
                                          std::uint64_t hi, std::uint64_t rng_seed);

struct DensityEstimate {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  std::uint64_t t = 0;
  std::uint64_t above = 0;        // # n0 <= t with mu_k > ln2/ln q
  std::uint64_t p_threshold = 0;  // least P with q^P > 2^k (exact decision)
  double fraction() const { return t == 0 ? 0.0 : static_cast<double>(above) / static_cast<double>(t); }
};

// Fraction of n0 in [1, t] whose mu_k exceeds ln2/ln q; the comparison
// P_k/k > ln2/ln q is decided exactly as q^{P_k} > 2^k.
DensityEstimate density_estimate(const Multiplier& q, unsigned k, std::uint64_t t);

// Cumulative parity coefficients mu_1 .. mu_{k_max} of the q=3 orbit of x0.
std::vector<Rat> equiparity_trace(const CqInt& x0, std::size_t k_max);

}  // namespace qcollatz
