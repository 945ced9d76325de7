#include "qcollatz/stats.hpp"

#include <cmath>

namespace qcollatz {

Rat binomial_pmf(std::uint64_t k, std::uint64_t m) {
  if (m > k) throw std::out_of_range("binomial_pmf requires 0 <= m <= k");
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
  return make_rat(c, pow2(static_cast<unsigned long>(k)));
}

Moments mk_moments(std::uint64_t k) {
  if (k == 0) throw std::domain_error("mk_moments requires k >= 1");
  return Moments{make_rat(1UL, 2UL), 1.0 / (2.0 * std::sqrt(static_cast<double>(k)))};
}

double chebyshev_divergence_bound(const Multiplier& q, std::uint64_t k) {
  if (q.q() < 5) throw std::domain_error("chebyshev_divergence_bound requires q >= 5");
  if (k == 0) throw std::domain_error("chebyshev_divergence_bound requires k >= 1");
  const double lq = std::log(static_cast<double>(q.q()));
  const double l2 = std::log(2.0);
  const double denom = static_cast<double>(k) * (2.0 * lq * lq - 8.0 * l2 * (lq - l2));
  return 1.0 - lq * lq / denom;
}

std::uint64_t rng_word(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// P_k of the length-k parity vector of X_q(n0), iterating in n-space.
std::uint64_t total_parity_of_seed(const Multiplier& q, Int n, unsigned k) {
  std::uint64_t ones = 0;
  for (unsigned j = 0; j < k; ++j) {
    if (mpz_odd_p(n.get_mpz_t())) {
      ++ones;
      n *= q.q();
      n += 1;
    }
    n >>= 1;
  }
  return ones;
}

// uniform n0 in [1, 2^k] from the counter stream; sample index i uses words
// [i*W, (i+1)*W) with W = ceil(k/64)
Int sample_seed(std::uint64_t rng_seed, unsigned k, std::uint64_t sample_index) {
  const unsigned words = (k + 63) / 64;
  Int n = 0;
  for (unsigned w = 0; w < words; ++w) {
    Int part(static_cast<unsigned long>(rng_word(rng_seed, sample_index * words + w)));
    n |= part << (64 * w);
  }
  // keep low k bits -> [0, 2^k), then shift to [1, 2^k]
  Int mask = pow2(k) - 1;
  n &= mask;
  n += 1;
  return n;
}

}  // namespace

MuHistogram mu_distribution_exhaustive(const Multiplier& q, unsigned k, std::uint64_t budget) {
  if (k == 0 || k >= 63) throw budget_error("mu_distribution_exhaustive: k out of range");
  const std::uint64_t total = std::uint64_t{1} << k;
  if (total > budget) throw budget_error("mu_distribution_exhaustive: 2^k exceeds budget");

  MuHistogram h;
  h.q = q.q();
  h.k = k;
  h.exhaustive = true;
  h.total = total;
  h.counts.assign(k + 1, 0);
  for (std::uint64_t n0 = 1; n0 <= total; ++n0)
    ++h.counts[total_parity_of_seed(q, Int(static_cast<unsigned long>(n0)), k)];
  return h;
}

MuHistogram mu_distribution_sampled_range(const Multiplier& q, unsigned k, std::uint64_t lo,
                                          std::uint64_t hi, std::uint64_t rng_seed) {
  if (k == 0) throw std::domain_error("k must be >= 1");
  MuHistogram h;
  h.q = q.q();
  h.k = k;
  h.exhaustive = false;
  h.total = hi - lo;
  h.rng_seed = rng_seed;
  h.counts.assign(k + 1, 0);
  for (std::uint64_t i = lo; i < hi; ++i)
    ++h.counts[total_parity_of_seed(q, sample_seed(rng_seed, k, i), k)];
  return h;
}

MuHistogram mu_distribution_sampled(const Multiplier& q, unsigned k, std::uint64_t samples,
                                    std::uint64_t rng_seed) {
  return mu_distribution_sampled_range(q, k, 0, samples, rng_seed);
}

DensityEstimate density_estimate(const Multiplier& q, unsigned k, std::uint64_t t) {
  if (q.q() < 5) throw std::domain_error("density_estimate requires q >= 5");
  if (k == 0 || t == 0) throw std::domain_error("density_estimate requires k >= 1, t >= 1");

  DensityEstimate d;
  d.q = q.q();
  d.k = k;
  d.t = t;
  // mu_k > ln2/ln q  <=>  q^{P_k} > 2^k; find the least such P once
  const Int two_k = pow2(k);
  Int qp = 1;
  std::uint64_t p_thr = 0;
  while (qp <= two_k) {
    qp *= q.q();
    ++p_thr;
  }
  d.p_threshold = p_thr;
  for (std::uint64_t n0 = 1; n0 <= t; ++n0)
    if (total_parity_of_seed(q, Int(static_cast<unsigned long>(n0)), k) >= p_thr) ++d.above;
  return d;
}

std::vector<Rat> equiparity_trace(const CqInt& x0, std::size_t k_max) {
  if (k_max == 0) throw std::domain_error("equiparity_trace requires k_max >= 1");
  Multiplier q3(3);
  std::vector<Rat> mus;
  mus.reserve(k_max);
  CqInt x(q3, x0.value());  // revalidate against Z_c3
  unsigned long ones = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    ones += static_cast<unsigned long>(alpha_q(q3, x));
    mus.push_back(make_rat(ones, static_cast<unsigned long>(k)));
    if (k < k_max) x = f_map(q3, x);
  }
  return mus;
}

}  // namespace qcollatz
