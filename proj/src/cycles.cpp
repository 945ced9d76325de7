#include "qcollatz/cycles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace qcollatz {

namespace {

Int int_from_u64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

}  // namespace

// ---------------------------------------------------------------------------
// Cycle

Cycle::Cycle(std::uint64_t q, std::vector<Int> orbit, ParityVector parity)
    : q_(q),
      orbit_n_(std::move(orbit)),
      min_seed_n_(orbit_n_.front()),
      period_(orbit_n_.size()),
      total_parity_(parity.total_parity()),
      parity_(std::move(parity)) {
  min_seed_x_ = min_seed_n_ * (2 * (q_ - 1)) + 1;
  std::uint64_t last_one = 0;
  for (std::uint64_t j = 0; j < period_; ++j)
    if (parity_.bit(j)) last_one = j;
  s_ = last_one + 1;
  class_h_ = mpz_fdiv_ui(min_seed_n_.get_mpz_t(), q_);
  lambda_ = (min_seed_n_ - int_from_u64(class_h_)) / int_from_u64(q_);
}

Cycle Cycle::from_orbit_n(const Multiplier& q, std::vector<Int> orbit_n) {
  const std::size_t p = orbit_n.size();
  if (p < 2) throw std::logic_error("cycle period must be >= 2 (no fixed points)");

  for (std::size_t j = 0; j < p; ++j)
    if (t_map(q, orbit_n[j]) != orbit_n[(j + 1) % p])
      throw std::logic_error("orbit is not closed under T_q");

  {
    std::vector<Int> sorted = orbit_n;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("orbit revisits a value before one period (period not prime)");
  }

  std::size_t min_idx =
      std::min_element(orbit_n.begin(), orbit_n.end()) - orbit_n.begin();
  std::rotate(orbit_n.begin(), orbit_n.begin() + min_idx, orbit_n.end());

  std::vector<std::uint8_t> bits(p);
  for (std::size_t j = 0; j < p; ++j)
    bits[j] = static_cast<std::uint8_t>(mpz_odd_p(orbit_n[j].get_mpz_t()) ? 1 : 0);
  ParityVector parity(std::move(bits));

  if (parity.bit(0) != 1) throw std::logic_error("cycle minimum must be odd");
  if (parity.bit(p - 1) != 0) throw std::logic_error("last cycle step must descend");
  if (std::gcd(parity.total_parity(), static_cast<std::uint64_t>(p)) != 1)
    throw std::logic_error("cycle mu must be an irreducible fraction");

  Cycle c(q.q(), std::move(orbit_n), std::move(parity));
  if (c.class_h_ == 0) throw std::logic_error("cycle in the excluded residual class zero");
  const bool h_even = c.class_h_ % 2 == 0;
  const bool lambda_odd = mpz_odd_p(c.lambda_.get_mpz_t()) != 0;
  if (h_even != lambda_odd)
    throw std::logic_error("cycle violates the h/lambda parity rule");
  return c;
}

std::vector<Int> Cycle::orbit_x(const Multiplier& q) const {
  std::vector<Int> xs;
  xs.reserve(orbit_n_.size());
  for (const Int& n : orbit_n_) xs.push_back(conjugate(q, n).value());
  return xs;
}

// ---------------------------------------------------------------------------
// Periodicity conditions

GFunction g_function(const ParityVector& A) {
  const std::size_t p = A.length();
  if (A.total_parity() == 0) throw std::domain_error("g_function requires at least one 1-bit");
  if (A.bit(p - 1) != 0) throw std::domain_error("g_function requires a trailing zero");
  GFunction g;
  g.values.reserve(A.total_parity());
  for (std::size_t j = p; j-- > 0;)
    if (A.bit(j)) g.values.push_back(j);
  return g;
}

std::optional<CqInt> first_periodicity_solve(const Multiplier& q, const ParityVector& A) {
  const std::size_t p = A.length();
  if (p < 2 || A.bit(0) != 1 || A.bit(p - 1) != 0)
    throw std::domain_error("first_periodicity_solve requires p >= 2, A[0]=1, A[p-1]=0");

  const unsigned long P = static_cast<unsigned long>(A.total_parity());
  Int D = pow2(static_cast<unsigned long>(p)) - pow_ui(Int(q.q()), P);
  if (sgn(D) <= 0) return std::nullopt;

  std::vector<Int> qpow(P + 1);
  qpow[0] = 1;
  for (unsigned long i = 1; i <= P; ++i) qpow[i] = qpow[i - 1] * q.q();
  Int rhs = 0;
  for (std::size_t j = p; j-- > 0;) {
    rhs <<= 1;
    rhs += qpow[A.suffix_ones(j)];
  }

  if (!mpz_divisible_p(rhs.get_mpz_t(), D.get_mpz_t())) return std::nullopt;
  Int x0;
  mpz_divexact(x0.get_mpz_t(), rhs.get_mpz_t(), D.get_mpz_t());
  if (x0 < 2 * Int(q.q()) - 1 || mpz_fdiv_ui(x0.get_mpz_t(), q.two_qm1()) != 1)
    return std::nullopt;
  CqInt seed(q, std::move(x0));
  if (!(parity_vector(q, seed, p) == A)) return std::nullopt;
  return seed;
}

bool second_periodicity_check(const Multiplier& q, const Int& n0, const ParityVector& A) {
  const std::size_t p = A.length();
  if (p < 2 || A.bit(0) != 1 || A.bit(p - 1) != 0)
    throw std::domain_error("second_periodicity_check requires p >= 2, A[0]=1, A[p-1]=0");
  GFunction g = g_function(A);
  const unsigned long P = static_cast<unsigned long>(A.total_parity());

  Int lhs = (pow2(static_cast<unsigned long>(p)) - pow_ui(Int(q.q()), P)) * n0;
  Int rhs = 0;
  Int qj = 1;
  for (unsigned long j = 0; j < P; ++j) {
    rhs += pow2(static_cast<unsigned long>(g.values[j])) * qj;
    qj *= q.q();
  }
  return lhs == rhs;
}

std::optional<CongruenceClass> cycle_congruence_solve(const Multiplier& q, std::uint64_t p,
                                                      std::uint64_t s) {
  if (s < 1 || s > p - 1) throw std::domain_error("cycle_congruence_solve requires 1 <= s <= p-1");
  Int qz = int_from_u64(q.q());
  Int two_p = pow2(static_cast<unsigned long>(p));
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), two_p.get_mpz_t(), qz.get_mpz_t()) == 0)
    return std::nullopt;  // unreachable: q odd
  Int h = (inv * pow2(static_cast<unsigned long>(s - 1))) % qz;
  if (sgn(h) == 0) return std::nullopt;  // excluded residual class zero
  CongruenceClass out;
  out.h = to_u64(h);
  out.m0 = (two_p * h - pow2(static_cast<unsigned long>(s - 1))) / qz;
  return out;
}

// ---------------------------------------------------------------------------
// Orbit search

namespace {

std::uint64_t digest_big(const Int& v) {
  const mp_limb_t* limbs = mpz_limbs_read(v.get_mpz_t());
  const std::size_t n = mpz_size(v.get_mpz_t());
  std::uint64_t h = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(limbs[i]);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

// Reused across seeds: chronological history with exact revisit detection.
// Small (64-bit) values key the map by value; larger ones by a limb digest
// with exact confirmation, so detection is never probabilistic.
struct ScanBuffers {
  std::vector<std::uint64_t> small;
  std::vector<std::uint8_t> is_big;
  std::vector<Int> big;
  std::unordered_map<std::uint64_t, std::uint32_t> small_first;
  std::unordered_map<std::uint64_t, std::uint32_t> big_first;
  std::vector<std::uint32_t> big_collisions;
  std::uint32_t used = 0;

  void begin_seed(std::size_t step_cap) {
    if (small.size() < step_cap + 1) {
      small.resize(step_cap + 1);
      is_big.resize(step_cap + 1);
    }
    std::fill_n(is_big.begin(), used, std::uint8_t{0});
    small_first.clear();
    big_first.clear();
    big_collisions.clear();
    used = 0;
  }

  Int value_at(std::uint32_t step) const {
    return is_big[step] ? big[step] : Int(static_cast<unsigned long>(small[step]));
  }
};

struct SeedOutcome {
  enum Kind { kCycle, kDescent, kStepCap, kSizeCap } kind = kStepCap;
  std::vector<Int> cycle_orbit;
};

SeedOutcome scan_seed(const Multiplier& q, std::uint64_t n0, std::uint64_t step_cap,
                      std::size_t size_cap_bits, ScanBuffers& buf) {
  const std::uint64_t qv = q.q();
  const std::uint64_t odd_safe = (~std::uint64_t{0} - 1) / qv;
  const bool descent_shortcut = qv == 3;

  buf.begin_seed(step_cap);

  bool big_mode = false;
  std::uint64_t v64 = n0;
  Int vbig;

  auto record = [&](std::uint32_t step) {
    if (!big_mode) {
      buf.small[step] = v64;
      buf.is_big[step] = 0;
      buf.small_first.emplace(v64, step);
    } else {
      if (buf.big.size() <= step) buf.big.resize(step + 1);
      buf.big[step] = vbig;
      buf.is_big[step] = 1;
      auto [it, inserted] = buf.big_first.emplace(digest_big(vbig), step);
      if (!inserted) buf.big_collisions.push_back(step);
    }
    buf.used = step + 1;
  };

  auto find_revisit = [&]() -> std::optional<std::uint32_t> {
    if (!big_mode) {
      auto it = buf.small_first.find(v64);
      if (it != buf.small_first.end()) return it->second;
      return std::nullopt;
    }
    auto it = buf.big_first.find(digest_big(vbig));
    if (it != buf.big_first.end() && buf.is_big[it->second] && buf.big[it->second] == vbig)
      return it->second;
    for (std::uint32_t step : buf.big_collisions)
      if (buf.is_big[step] && buf.big[step] == vbig) return step;
    return std::nullopt;
  };

  record(0);
  for (std::uint64_t step = 1; step <= step_cap; ++step) {
    if (!big_mode) {
      if (v64 & 1) {
        if (v64 > odd_safe) {
          vbig = static_cast<unsigned long>(v64);
          vbig *= qv;
          vbig += 1;
          vbig >>= 1;
          big_mode = true;
        } else {
          v64 = (v64 * qv + 1) >> 1;
        }
      } else {
        v64 >>= 1;
      }
    } else {
      if (mpz_odd_p(vbig.get_mpz_t())) {
        vbig *= qv;
        vbig += 1;
      }
      vbig >>= 1;
      if (mpz_fits_ulong_p(vbig.get_mpz_t())) {
        v64 = mpz_get_ui(vbig.get_mpz_t());
        big_mode = false;
      }
    }

    if (descent_shortcut && !big_mode && v64 < n0) {
      SeedOutcome out;
      out.kind = SeedOutcome::kDescent;
      return out;
    }
    const std::size_t bits =
        big_mode ? mpz_sizeinbase(vbig.get_mpz_t(), 2) : std::bit_width(v64);
    if (bits > size_cap_bits) {
      SeedOutcome out;
      out.kind = SeedOutcome::kSizeCap;
      return out;
    }
    if (auto f = find_revisit()) {
      SeedOutcome out;
      out.kind = SeedOutcome::kCycle;
      out.cycle_orbit.reserve(step - *f);
      for (std::uint32_t j = *f; j < step; ++j) out.cycle_orbit.push_back(buf.value_at(j));
      return out;
    }
    if (step < step_cap) record(static_cast<std::uint32_t>(step));
  }
  SeedOutcome out;
  out.kind = SeedOutcome::kStepCap;
  return out;
}

void insert_cycle(std::map<Int, Cycle>& dedup, Cycle c) {
  dedup.try_emplace(c.min_seed_n(), std::move(c));
}

SearchReport report_from_dedup(const Multiplier& q, std::string method, SearchBounds bounds,
                               std::map<Int, Cycle>&& dedup) {
  SearchReport rep;
  rep.q = q.q();
  rep.method = std::move(method);
  rep.bounds = bounds;
  rep.cycles.reserve(dedup.size());
  for (auto& [n0, c] : dedup) rep.cycles.push_back(std::move(c));
  return rep;
}

}  // namespace

void SearchReport::merge(const SearchReport& other) {
  scanned += other.scanned;
  undetermined += other.undetermined;
  resolved_by_descent += other.resolved_by_descent;
  pruned += other.pruned;
  partial = partial || other.partial;
  bounds.n_max = std::max(bounds.n_max, other.bounds.n_max);
  bounds.p_max = std::max(bounds.p_max, other.bounds.p_max);
  bounds.step_cap = std::max(bounds.step_cap, other.bounds.step_cap);
  bounds.size_cap_bits = std::max(bounds.size_cap_bits, other.bounds.size_cap_bits);
  std::map<Int, Cycle> dedup;
  for (auto& c : cycles) dedup.try_emplace(c.min_seed_n(), std::move(c));
  for (const auto& c : other.cycles) dedup.try_emplace(c.min_seed_n(), c);
  cycles.clear();
  for (auto& [n0, c] : dedup) cycles.push_back(std::move(c));
}

SearchReport find_cycles_orbit_range(const Multiplier& q, std::uint64_t n_lo, std::uint64_t n_hi,
                                     std::uint64_t step_cap, std::size_t size_cap_bits) {
  if (n_lo < 1 || n_hi < n_lo) throw std::domain_error("bad seed range");
  if (step_cap < 1) throw std::domain_error("step_cap must be >= 1");

  ScanBuffers buf;
  std::map<Int, Cycle> dedup;
  const SearchBounds bounds{n_hi, 0, step_cap, size_cap_bits};
  std::uint64_t scanned = 0, undetermined = 0, descents = 0;

  for (std::uint64_t n0 = n_lo; n0 <= n_hi; ++n0) {
    ++scanned;
    SeedOutcome out = scan_seed(q, n0, step_cap, size_cap_bits, buf);
    switch (out.kind) {
      case SeedOutcome::kCycle:
        insert_cycle(dedup, Cycle::from_orbit_n(q, std::move(out.cycle_orbit)));
        break;
      case SeedOutcome::kDescent:
        ++descents;
        break;
      case SeedOutcome::kStepCap:
      case SeedOutcome::kSizeCap:
        ++undetermined;
        break;
    }
  }
  SearchReport rep = report_from_dedup(q, "orbit", bounds, std::move(dedup));
  rep.scanned = scanned;
  rep.undetermined = undetermined;
  rep.resolved_by_descent = descents;
  return rep;
}

SearchReport find_cycles_orbit(const Multiplier& q, std::uint64_t n_max, std::uint64_t step_cap,
                               std::size_t size_cap_bits) {
  return find_cycles_orbit_range(q, 1, n_max, step_cap, size_cap_bits);
}

SearchReport find_cycles_parity_enum_length(const Multiplier& q, std::uint64_t p) {
  if (p < 2 || p > 62) throw std::domain_error("parity enumeration requires 2 <= p <= 62");

  SearchBounds bounds{0, p, 0, 0};
  std::map<Int, Cycle> dedup;
  SearchReport counts;

  // largest admissible total parity: q^P < 2^p
  const Int two_p = pow2(static_cast<unsigned long>(p));
  std::uint64_t max_P = 0;
  {
    Int qp = q.q();
    while (qp < two_p) {
      ++max_P;
      qp *= q.q();
    }
  }

  const std::uint64_t mids = std::uint64_t{1} << (p - 2);
  std::vector<std::uint8_t> bits(p);
  for (std::uint64_t mid = 0; mid < mids; ++mid) {
    ++counts.scanned;
    const std::uint64_t P = 1 + static_cast<std::uint64_t>(std::popcount(mid));
    if (P > max_P) {
      ++counts.pruned;
      continue;
    }
    bits.assign(p, 0);
    bits[0] = 1;
    for (std::uint64_t i = 0; i + 2 < p; ++i) bits[i + 1] = (mid >> i) & 1;
    ParityVector A(bits);
    if (A.is_repetition()) continue;
    if (auto x0 = first_periodicity_solve(q, A)) {
      // one period of the orbit, any rotation; canonicalization picks the min
      std::vector<Int> orbit_n;
      orbit_n.reserve(p);
      Int n = unconjugate(q, *x0);
      for (std::uint64_t j = 0; j < p; ++j) {
        orbit_n.push_back(n);
        if (j + 1 < p) n = t_map(q, n);
      }
      insert_cycle(dedup, Cycle::from_orbit_n(q, std::move(orbit_n)));
    }
  }

  SearchReport rep = report_from_dedup(q, "parity-enum", bounds, std::move(dedup));
  rep.scanned = counts.scanned;
  rep.pruned = counts.pruned;
  return rep;
}

SearchReport find_cycles_parity_enum(const Multiplier& q, std::uint64_t p_max,
                                     std::uint64_t budget) {
  if (p_max < 2) throw std::domain_error("p_max must be >= 2");
  SearchReport rep;
  rep.q = q.q();
  rep.method = "parity-enum";
  rep.bounds = SearchBounds{0, p_max, 0, 0};

  std::uint64_t spent = 0;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    const std::uint64_t cost = p <= 62 ? (std::uint64_t{1} << (p - 2)) : ~std::uint64_t{0};
    if (cost > budget || spent > budget - cost) {
      rep.partial = true;
      break;
    }
    spent += cost;
    rep.merge(find_cycles_parity_enum_length(q, p));
    rep.next_chunk = p - 1;  // chunk i <-> length p = i + 2
  }
  rep.bounds.p_max = p_max;
  return rep;
}

Cycle mersenne_trivial_cycle(unsigned p) {
  if (p < 2 || p > 62) throw std::domain_error("mersenne_trivial_cycle requires 2 <= p <= 62");
  const std::uint64_t qv = (std::uint64_t{1} << p) - 1;
  Multiplier q(qv);
  std::vector<Int> orbit_n;
  orbit_n.reserve(p);
  orbit_n.push_back(1);
  for (unsigned j = p - 1; j >= 1; --j) orbit_n.push_back(pow2(j));
  Cycle c = Cycle::from_orbit_n(q, std::move(orbit_n));
  if (!second_periodicity_check(q, c.min_seed_n(), c.parity()))
    throw std::logic_error("mersenne trivial cycle fails the second periodicity condition");
  return c;
}

std::vector<std::uint64_t> class_exclusions(const Multiplier& q) {
  const std::uint64_t qv = q.q();
  if (qv > 1'000'000) throw budget_error("class_exclusions enumerates only q <= 10^6");

  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 3; d * d <= qv; d += 2) {
    if (qv % d == 0) {
      divisors.push_back(d);
      if (d != qv / d) divisors.push_back(qv / d);
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors)
    for (std::uint64_t h = d; h <= qv - 1; h += d) out.push_back(h);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool class_excluded(const Multiplier& q, std::uint64_t h) {
  if (h < 1 || h > q.q() - 1) throw std::domain_error("class h must be in [1, q-1]");
  return std::gcd(q.q(), h) != 1;
}

bool divisor_condition(const Multiplier& q, const Cycle& c) {
  GFunction g = g_function(c.parity());
  const std::uint64_t k = c.period() - g.values[0];
  Int M = int_from_u64(c.class_h()) * pow2(static_cast<unsigned long>(k)) - 1;
  return mpz_divisible_ui_p(M.get_mpz_t(), q.q()) != 0;
}

bool parity_coeff_bounds_check(const Multiplier& q, const Cycle& c) {
  const unsigned long p = static_cast<unsigned long>(c.period());
  const unsigned long P = static_cast<unsigned long>(c.total_parity());
  const Int qz = int_from_u64(q.q());

  // Eq-12 identity: q^P prod(x_j + 1) == 2^p prod(x_j)
  std::vector<Int> xs = c.orbit_x(q);
  Int lhs = pow_ui(qz, P);
  Int rhs = pow2(p);
  for (const Int& x : xs) {
    lhs *= x + 1;
    rhs *= x;
  }
  if (lhs != rhs) return false;

  const Int& xm = xs.front();  // canonical rotation: min first
  const Int xM = *std::max_element(xs.begin(), xs.end());
  const Int qP = pow_ui(qz, P);

  // ln((2q-1)/q)/ln q <= log_q(2 x_m/(x_m+1))  <=>  (2q-1)(x_m+1) <= 2 q x_m
  if ((2 * qz - 1) * (xm + 1) > 2 * qz * xm) return false;
  // log_q(2 x_m/(x_m+1)) < mu_p  <=>  (2 x_m)^p < q^P (x_m+1)^p
  if (!(pow_ui(2 * xm, p) < qP * pow_ui(xm + 1, p))) return false;
  // mu_p < log_q(2 x_M/(x_M+1))  <=>  q^P (x_M+1)^p < (2 x_M)^p
  if (!(qP * pow_ui(xM + 1, p) < pow_ui(2 * xM, p))) return false;
  // log_q(2 x_M/(x_M+1)) < log_q 2  <=>  x_M < x_M + 1, trivially
  if (!(2 * xM < 2 * (xM + 1))) return false;

  // 0 < 2 - q^{mu_p} < 1/q  <=>  q^P < 2^p  and  q^{P+p} > (2q-1)^p
  if (!(qP < pow2(p))) return false;
  if (!(pow_ui(qz, P + p) > pow_ui(2 * qz - 1, p))) return false;
  return true;
}

namespace {

// Remaining target sum_{t=idx}^{P-2} 2^{g(t)} q^{t-idx}; picks g(idx) = e with
// min_e <= e <= max_e, peels 2^e, divides by q, recurses. Collects every
// solution branch.
void match_g(const Int& R, std::uint64_t qv, std::uint64_t P, std::uint64_t idx,
             std::uint64_t max_e, std::vector<std::uint64_t>& g_prefix,
             std::vector<std::vector<std::uint64_t>>& out) {
  if (idx == P - 1) {
    if (sgn(R) == 0) {
      std::vector<std::uint64_t> g = g_prefix;
      g.push_back(0);  // g(P-1) = 0
      out.push_back(std::move(g));
    }
    return;
  }
  const std::uint64_t min_e = P - 1 - idx;
  for (std::uint64_t e = min_e; e <= max_e; ++e) {
    Int t = R - pow2(static_cast<unsigned long>(e));
    if (sgn(t) < 0) break;
    if (!mpz_divisible_ui_p(t.get_mpz_t(), qv)) continue;
    Int next;
    mpz_divexact_ui(next.get_mpz_t(), t.get_mpz_t(), qv);
    g_prefix.push_back(e);
    match_g(next, qv, P, idx + 1, e - 1, g_prefix, out);
    g_prefix.pop_back();
  }
}

}  // namespace

std::vector<TrivialCycleSolution> search_trivial_cycles(std::uint64_t P_target,
                                                        std::uint64_t q_max,
                                                        std::uint64_t p_max) {
  if (P_target < 1) throw std::domain_error("P_target must be >= 1");
  std::vector<TrivialCycleSolution> out;
  for (std::uint64_t qv = 3; qv <= q_max; qv += 2) {
    for (std::uint64_t p = std::max<std::uint64_t>(2, P_target + 1); p <= p_max; ++p) {
      // 2^p = q^P + sum_j 2^{g(j)} q^j with g(P-1) = 0 peeled off
      Int R = pow2(static_cast<unsigned long>(p)) -
              pow_ui(Int(static_cast<unsigned long>(qv)), static_cast<unsigned long>(P_target)) -
              pow_ui(Int(static_cast<unsigned long>(qv)),
                     static_cast<unsigned long>(P_target - 1));
      if (sgn(R) < 0) continue;
      std::vector<std::uint64_t> prefix;
      std::vector<std::vector<std::uint64_t>> gs;
      if (P_target == 1) {
        if (sgn(R) == 0) gs.push_back({0});
      } else {
        match_g(R, qv, P_target, 0, p - 2, prefix, gs);
      }
      for (auto& g : gs) {
        // reject l-fold covers of a shorter cycle: the would-be parity vector
        // (ones exactly at the g positions) must not repeat a proper period
        std::vector<std::uint8_t> bits(p, 0);
        for (std::uint64_t e : g) bits[e] = 1;
        if (ParityVector(std::move(bits)).is_repetition()) continue;
        out.push_back(TrivialCycleSolution{qv, p, std::move(g)});
      }
    }
  }
  return out;
}

}  // namespace qcollatz
