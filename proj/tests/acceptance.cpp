// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "qcollatz/cli.hpp"
#include "qcollatz/cycles.hpp"
#include "qcollatz/io.hpp"
#include "qcollatz/parallel.hpp"
#include "qcollatz/stats.hpp"

using namespace qcollatz;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<Criterion> g_results;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void record(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  g_results.push_back(Criterion{id, name, pass, detail, seconds});
}

unsigned workers() { return resolve_worker_count(0); }

SearchReport threaded_orbit_search(const Multiplier& q, std::uint64_t n_max,
                                   std::uint64_t step_cap, std::size_t size_cap_bits) {
  const std::uint64_t chunk = 2048;
  const std::uint64_t chunks = (n_max + chunk - 1) / chunk;
  auto parts = run_indexed<SearchReport>(chunks, workers(), [&](std::uint64_t i) {
    const std::uint64_t lo = i * chunk + 1;
    const std::uint64_t hi = std::min(n_max, i * chunk + chunk);
    return find_cycles_orbit_range(q, lo, hi, step_cap, size_cap_bits);
  });
  SearchReport rep;
  rep.q = q.q();
  rep.method = "orbit";
  for (auto& part : parts) rep.merge(part);
  rep.bounds = SearchBounds{n_max, 0, step_cap, size_cap_bits};
  return rep;
}

std::string cycle_brief(const Cycle& c) {
  std::ostringstream s;
  s << "(n0=" << c.min_seed_n() << ",p=" << c.period() << ",P=" << c.total_parity()
    << ",s=" << c.s() << ")";
  return s.str();
}

// ---------------------------------------------------------------------------

std::vector<Cycle> g_q5_cycles;
std::vector<Cycle> g_q181_cycles;
std::vector<Cycle> g_mersenne_cycles;

void criterion_1() {
  Timer t;
  Multiplier q5(5);
  SearchReport rep = threaded_orbit_search(q5, 10000, 10000, 256);
  g_q5_cycles = rep.cycles;

  bool ok = rep.pi_count() == 3;
  std::ostringstream detail;
  struct Row {
    unsigned long n0, p, P, s;
    std::vector<Int> orbit;
  };
  const std::vector<Row> expect{
      {1, 5, 2, 2, {9, 25, 65, 33, 17}},
      {13, 7, 3, 3, {105, 265, 665, 1665, 833, 417, 209}},
      {17, 7, 3, 5, {137, 345, 865, 433, 217, 545, 273}},
  };
  if (ok) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Cycle& c = rep.cycles[i];
      if (c.min_seed_n() != Int(expect[i].n0) || c.period() != expect[i].p ||
          c.total_parity() != expect[i].P || c.s() != expect[i].s ||
          c.orbit_x(q5) != expect[i].orbit)
        ok = false;
    }
  }
  const double secs = t.seconds();
  if (secs >= 60.0) ok = false;
  detail << rep.pi_count() << " cycles";
  for (const auto& c : rep.cycles) detail << " " << cycle_brief(c);
  detail << ", x-orbits exact, scanned=" << rep.scanned << " undetermined=" << rep.undetermined;
  record(1, "Table 1 reproduction (q=5 orbit search, n_max=1e4)", ok, detail.str(), secs);
}

void criterion_2() {
  Timer t;
  Multiplier q(181);
  SearchReport rep = find_cycles_parity_enum(q, 15);
  g_q181_cycles = rep.cycles;

  bool ok = rep.pi_count() == 2 && !rep.partial;
  if (ok) {
    ok = rep.cycles[0].min_seed_x() == 9721 && rep.cycles[1].min_seed_x() == 12601 &&
         rep.cycles[0].period() == 15 && rep.cycles[1].period() == 15 &&
         rep.cycles[0].total_parity() == 2 && rep.cycles[1].total_parity() == 2;
  }
  const double secs = t.seconds();
  if (secs >= 300.0) ok = false;
  std::ostringstream detail;
  detail << rep.pi_count() << " cycles, x0={";
  for (std::size_t i = 0; i < rep.cycles.size(); ++i)
    detail << rep.cycles[i].min_seed_x() << (i + 1 < rep.cycles.size() ? "," : "");
  detail << "}, scanned=" << rep.scanned << " pruned=" << rep.pruned;
  record(2, "Table 2 reproduction (q=181 parity enumeration, p_max=15)", ok, detail.str(), secs);
}

void criterion_3() {
  Timer t;
  bool ok = true;
  std::ostringstream detail;
  for (unsigned p : {2u, 3u, 4u, 5u}) {
    const std::uint64_t qv = (std::uint64_t{1} << p) - 1;
    Multiplier q(qv);
    SearchReport rep = threaded_orbit_search(q, 100000, 10000, 256);
    bool this_ok = rep.pi_count() == 1;
    if (this_ok) {
      const Cycle& c = rep.cycles[0];
      g_mersenne_cycles.push_back(c);
      this_ok = c.min_seed_n() == 1 && c.period() == p && c.mu() == make_rat(1UL, p);
    }
    detail << "q=" << qv << ": cycles=" << rep.pi_count() << " undetermined=" << rep.undetermined
           << " resolved=" << rep.resolved_by_descent << ";  ";
    ok = ok && this_ok;
  }
  record(3, "Mersenne uniqueness at desk scale (q in {3,7,15,31}, n_max=1e5)", ok, detail.str(),
         t.seconds());
}

void criterion_4() {
  Timer t;
  std::ostringstream out, err;
  int code = cli::run({"verify-collatz", "--max", "1000000"}, out, err);
  const double secs = t.seconds();
  bool ok = code == 0 && out.str().rfind("all reached 1 (n <= 1000000)", 0) == 0 && secs < 30.0;
  std::string second_line = out.str();
  auto nl = second_line.find('\n');
  second_line = nl == std::string::npos ? "" : second_line.substr(nl + 1);
  if (!second_line.empty() && second_line.back() == '\n') second_line.pop_back();
  record(4, "Collatz convergence scan (verify-collatz, n <= 1e6)", ok,
         "exit=" + std::to_string(code) + ", " + second_line, secs);
}

void criterion_5() {
  Timer t;
  bool ok = true;
  for (std::uint64_t qv : {3, 5, 7, 9}) {
    Multiplier q(qv);
    for (unsigned k = 1; k <= 12; ++k) {
      BijectionReport rep = verify_bijection(q, k);
      if (!rep.distinct || rep.count != (std::uint64_t{1} << k)) ok = false;
    }
  }
  std::uint64_t histograms = 0;
  for (std::uint64_t qv : {3, 5, 7}) {
    Multiplier q(qv);
    for (unsigned k = 1; k <= 16; ++k) {
      MuHistogram h = mu_distribution_exhaustive(q, k, std::uint64_t{1} << 17);
      ++histograms;
      for (unsigned m = 0; m <= k; ++m) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), k, m);
        if (Int(static_cast<unsigned long>(h.counts[m])) != binom) ok = false;
      }
    }
  }
  record(5, "Bijection exactness (k<=12) and binomial histograms (k<=16)", ok,
         "4 q values x 12 bijection checks, " + std::to_string(histograms) +
             " exhaustive histograms binomial-exact",
         t.seconds());
}

struct Eq8Tally {
  std::uint64_t trajectories = 0;
  std::uint64_t prefixes = 0;
  std::uint64_t violations = 0;
  void add(const Eq8Tally& o) {
    trajectories += o.trajectories;
    prefixes += o.prefixes;
    violations += o.violations;
  }
};

// exact Eq-8 lower-bound sweep over full q=3 descent orbits, n-space fast path
Eq8Tally eq8_scan_q3(std::uint64_t lo, std::uint64_t hi) {
  Eq8Tally tally;
  Int L, R;
  for (std::uint64_t n0 = lo; n0 <= hi; ++n0) {
    ++tally.trajectories;
    std::uint64_t v = n0;
    mpz_set_ui(R.get_mpz_t(), 4 * n0 + 1);  // x0 * 3^{P_j}
    unsigned long j = 0;
    while (v != 1 && j < 100000) {
      if (v & 1) {
        v = (3 * v + 1) >> 1;
        mpz_mul_ui(R.get_mpz_t(), R.get_mpz_t(), 3);
      } else {
        v >>= 1;
      }
      ++j;
      mpz_set_ui(L.get_mpz_t(), 4 * v + 1);  // x_j
      mpz_mul_2exp(L.get_mpz_t(), L.get_mpz_t(), j);
      ++tally.prefixes;
      if (mpz_cmp(L.get_mpz_t(), R.get_mpz_t()) <= 0) ++tally.violations;
    }
  }
  return tally;
}

Eq8Tally eq8_traj_scan(std::uint64_t qv, std::uint64_t lo, std::uint64_t hi, std::size_t k,
                       std::size_t size_cap) {
  Multiplier q(qv);
  Eq8Tally tally;
  for (std::uint64_t n0 = lo; n0 <= hi; ++n0) {
    Trajectory traj = iterate(q, conjugate(q, Int(static_cast<unsigned long>(n0))), k, size_cap);
    BoundReport rep = check_growth_bounds(q, traj, /*with_upper=*/false);
    ++tally.trajectories;
    tally.prefixes += rep.k;
    if (!rep.lower_ok) ++tally.violations;
  }
  return tally;
}

Eq8Tally g_c6_tally;  // filled by criterion 6, folded into criterion 7

void criterion_6() {
  Timer t;
  const std::uint64_t qs[] = {3, 5, 7, 9, 181};
  const std::uint64_t seed = 20240601;
  std::uint64_t failures = 0;
  const std::uint64_t trials = 10000;
  std::vector<std::uint64_t> trial_idx(trials);
  std::iota(trial_idx.begin(), trial_idx.end(), 0);

  const std::uint64_t chunk = 256;
  const std::uint64_t chunks = (trials + chunk - 1) / chunk;
  struct ChunkResult {
    std::uint64_t failures = 0;
    Eq8Tally tally;
  };
  auto parts = run_indexed<ChunkResult>(chunks, workers(), [&](std::uint64_t ci) {
    ChunkResult res;
    for (std::uint64_t i = ci * chunk; i < std::min(trials, ci * chunk + chunk); ++i) {
      Multiplier q(qs[rng_word(seed, 3 * i) % 5]);
      Int n0(static_cast<unsigned long>(rng_word(seed, 3 * i + 1) % 1000000 + 1));
      std::size_t k = 1 + rng_word(seed, 3 * i + 2) % 200;
      CqInt x0 = conjugate(q, n0);
      Trajectory traj = iterate(q, x0, k);
      CqInt xk = f_map(q, CqInt::unchecked(traj.back()));
      if (closed_form_power(q, x0, traj.parity) != xk) ++res.failures;
      if (closed_form_product(q, traj) != xk) ++res.failures;
      // direct iteration as the independent route
      CqInt walk = x0;
      for (std::size_t s = 0; s < k; ++s) walk = f_map(q, walk);
      if (walk != xk) ++res.failures;

      BoundReport rep = check_growth_bounds(q, traj, /*with_upper=*/false);
      ++res.tally.trajectories;
      res.tally.prefixes += rep.k;
      if (!rep.lower_ok) ++res.tally.violations;
    }
    return res;
  });
  for (const auto& part : parts) {
    failures += part.failures;
    g_c6_tally.add(part.tally);
  }
  record(6, "Closed-form equivalence (1e4 random triples, k<=200)", failures == 0,
         "power == product == iterate on all trials, failures=" + std::to_string(failures),
         t.seconds());
}

void criterion_7() {
  Timer t;
  Eq8Tally total = g_c6_tally;  // criterion-6 trajectories

  // criteria 1-3 cycle orbits, two periods from the minimum
  for (const auto& cycles : {&g_q5_cycles, &g_q181_cycles, &g_mersenne_cycles}) {
    for (const Cycle& c : *cycles) {
      Multiplier q(c.q());
      Trajectory traj =
          iterate(q, CqInt::unchecked(c.min_seed_x()), 2 * c.period(), default_size_cap_bits);
      BoundReport rep = check_growth_bounds(q, traj, false);
      ++total.trajectories;
      total.prefixes += rep.k;
      if (!rep.lower_ok) ++total.violations;
    }
  }

  // criterion-4 (and criterion-3 q=3) scan orbits: full descent trajectories
  {
    const std::uint64_t n_max = 1000000, chunk = 1 << 15;
    const std::uint64_t chunks = (n_max + chunk - 1) / chunk;
    auto parts = run_indexed<Eq8Tally>(chunks, workers(), [&](std::uint64_t i) {
      return eq8_scan_q3(i * chunk + 1, std::min(n_max, i * chunk + chunk));
    });
    for (const auto& part : parts) total.add(part);
  }

  // criterion-1 and criterion-3 scan orbits for q in {5,7,15,31}
  struct ScanSpec {
    std::uint64_t q, n_max, k;
  };
  for (const ScanSpec spec : {ScanSpec{5, 10000, 10000}, ScanSpec{7, 100000, 10000},
                              ScanSpec{15, 100000, 10000}, ScanSpec{31, 100000, 10000}}) {
    const std::uint64_t chunk = 2048;
    const std::uint64_t chunks = (spec.n_max + chunk - 1) / chunk;
    auto parts = run_indexed<Eq8Tally>(chunks, workers(), [&](std::uint64_t i) {
      return eq8_traj_scan(spec.q, i * chunk + 1, std::min(spec.n_max, i * chunk + chunk), spec.k,
                           256);
    });
    for (const auto& part : parts) total.add(part);
  }

  std::ostringstream detail;
  detail << total.trajectories << " trajectories, " << total.prefixes
         << " prefixes checked exactly, violations=" << total.violations;
  record(7, "Eq-8 strict lower bound at every prefix (criteria 1-6 trajectories)",
         total.violations == 0, detail.str(), t.seconds());
}

void criterion_8() {
  Timer t;
  bool ok = true;
  std::ostringstream detail;

  struct SeedViolations {
    std::uint64_t n0 = 0;
    std::uint64_t beyond = 0;
    std::uint64_t total = 0;
  };

  for (std::uint64_t qv : {3, 7}) {
    Multiplier q(qv);
    // trivial-cycle membership in x-space, for locating the absorption step
    std::set<Int> cycle_x;
    {
      Cycle c = mersenne_trivial_cycle(*q.mersenne_exp());
      for (const Int& x : c.orbit_x(q)) cycle_x.insert(x);
    }

    const std::uint64_t n_max = 10000, chunk = 512, k = 1000;
    const std::uint64_t chunks = (n_max + chunk - 1) / chunk;
    struct ChunkOut {
      std::vector<SeedViolations> rows;
      std::uint64_t lower_failures = 0;
      std::uint64_t upper_skipped = 0;
    };
    auto parts = run_indexed<ChunkOut>(chunks, workers(), [&](std::uint64_t ci) {
      ChunkOut out;
      for (std::uint64_t n0 = ci * chunk + 1; n0 <= std::min(n_max, ci * chunk + chunk); ++n0) {
        Trajectory traj = iterate(q, conjugate(q, Int(static_cast<unsigned long>(n0))), k);
        BoundReport rep = check_growth_bounds(q, traj);
        if (!rep.lower_ok) ++out.lower_failures;
        if (!rep.upper_checked) {
          ++out.upper_skipped;  // the excluded seed 2q-1
          continue;
        }
        if (rep.upper_violations.empty()) continue;
        // absorption = first index whose iterate lies in the trivial cycle
        std::uint64_t absorb = k + 1;
        for (std::size_t j = 0; j < traj.length(); ++j)
          if (cycle_x.count(traj.iterates[j])) {
            absorb = j;
            break;
          }
        SeedViolations row;
        row.n0 = n0;
        row.total = rep.upper_violations.size();
        for (std::uint64_t j : rep.upper_violations)
          if (j > absorb) ++row.beyond;
        if (row.beyond > 0) out.rows.push_back(row);
      }
      return out;
    });

    std::vector<SeedViolations> beyond_rows;
    std::uint64_t lower_failures = 0;
    for (auto& part : parts) {
      lower_failures += part.lower_failures;
      beyond_rows.insert(beyond_rows.end(), part.rows.begin(), part.rows.end());
    }
    if (lower_failures > 0) ok = false;

    detail << "q=" << qv << ": seeds-with-post-absorption-violations=" << beyond_rows.size();
    if (qv == 3) {
      // expected none at all
      if (!beyond_rows.empty()) ok = false;
    } else {
      // the in-cycle seed n0=2 (x0=25) violates at every j == 2 (mod 3); the
      // "k sufficiently large" clause never repairs the non-minimum phase
      if (beyond_rows.size() != 1 || beyond_rows[0].n0 != 2 || beyond_rows[0].beyond != 333)
        ok = false;
      for (const auto& row : beyond_rows)
        detail << " (n0=" << row.n0 << ": " << row.beyond << " of " << row.total << ")";
    }
    detail << ";  ";
  }
  record(8, "Lemma 3 report (q in {3,7}, n <= 1e4, k = 1e3; report-based)", ok, detail.str(),
         t.seconds());
}

void criterion_9() {
  Timer t;
  bool ok = true;
  std::uint64_t checked = 0;
  std::ostringstream detail;

  std::vector<Cycle> all;
  all.insert(all.end(), g_q5_cycles.begin(), g_q5_cycles.end());
  all.insert(all.end(), g_q181_cycles.begin(), g_q181_cycles.end());
  all.insert(all.end(), g_mersenne_cycles.begin(), g_mersenne_cycles.end());

  for (const Cycle& c : all) {
    Multiplier q(c.q());
    ++checked;
    if (!second_periodicity_check(q, c.min_seed_n(), c.parity())) ok = false;
    if (!divisor_condition(q, c)) ok = false;
    if (!parity_coeff_bounds_check(q, c)) ok = false;
    if (class_excluded(q, c.class_h())) ok = false;
    auto cc = cycle_congruence_solve(q, c.period(), c.s());
    if (!cc || cc->h != c.class_h()) ok = false;
    // Theorem-1 class structure
    if (c.min_seed_n() != Int(static_cast<unsigned long>(c.class_h())) +
                              c.lambda() * Int(static_cast<unsigned long>(c.q())))
      ok = false;
    const bool h_even = c.class_h() % 2 == 0;
    if (h_even != (mpz_odd_p(c.lambda().get_mpz_t()) != 0)) ok = false;
    if (std::gcd(c.total_parity(), c.period()) != 1) ok = false;
    auto solved = first_periodicity_solve(q, c.parity());
    if (!solved || solved->value() != c.min_seed_x()) ok = false;
  }
  // the q=181 margin, decided by exact integers: 2 - 181^{2/15} < 1/181
  const bool margin = pow_ui(Int(181), 17) > pow_ui(Int(361), 15) && pow_ui(Int(181), 2) < pow2(15);
  if (!margin) ok = false;
  detail << checked << " cycles pass both periodicity conditions, Lemma 6, Lemma 4 "
         << "(181-margin exact), Theorem-1 class structure, exclusions";
  record(9, "Periodicity-condition cross-checks on every found cycle", ok, detail.str(),
         t.seconds());
}

void criterion_10() {
  Timer t1;
  auto p1 = search_trivial_cycles(1, 10000, 14);
  const double secs1 = t1.seconds();
  std::vector<std::uint64_t> got;
  for (const auto& s : p1) got.push_back(s.q);
  const std::vector<std::uint64_t> mersennes{3,   7,   15,  31,   63,   127,
                                             255, 511, 1023, 2047, 4095, 8191};
  bool ok = got == mersennes && secs1 < 60.0;

  Timer t2;
  auto p2 = search_trivial_cycles(2, 10000, 40);
  const double secs2 = t2.seconds();
  ok = ok && p2.size() == 1 && p2[0].q == 5 && p2[0].p == 5 &&
       p2[0].g == std::vector<std::uint64_t>{1, 0} && secs2 < 60.0;

  std::ostringstream detail;
  detail << "P=1 -> " << p1.size() << " Mersenne q; P=2 -> ";
  for (const auto& s : p2) detail << "(q=" << s.q << ",p=" << s.p << ")";
  record(10, "Trivial-cycle classification (Props. 3-4)", ok, detail.str(), secs1 + secs2);
}

void criterion_11() {
  Timer t;
  bool ok = true;
  std::ostringstream detail;
  const std::uint64_t samples = 100000;
  const std::uint64_t seed = 20240601;

  for (std::uint64_t qv : {5, 7}) {
    Multiplier q(qv);
    for (unsigned k : {50u, 100u}) {
      const std::uint64_t chunk = 1 << 14;
      const std::uint64_t chunks = (samples + chunk - 1) / chunk;
      auto parts = run_indexed<MuHistogram>(chunks, workers(), [&](std::uint64_t i) {
        return mu_distribution_sampled_range(q, k, i * chunk,
                                             std::min(samples, i * chunk + chunk), seed);
      });
      std::vector<std::uint64_t> counts(k + 1, 0);
      for (const auto& part : parts)
        for (unsigned m = 0; m <= k; ++m) counts[m] += part.counts[m];

      // threshold P* = least P with q^P > 2^k (exact)
      const Int two_k = pow2(k);
      Int qp = 1;
      unsigned p_thr = 0;
      while (qp <= two_k) {
        qp *= qv;
        ++p_thr;
      }
      std::uint64_t above = 0;
      for (unsigned m = p_thr; m <= k; ++m) above += counts[m];
      const double fraction = static_cast<double>(above) / static_cast<double>(samples);
      const double bound = chebyshev_divergence_bound(q, k);
      char buf[160];
      std::snprintf(buf, sizeof buf, "q=%" PRIu64 " k=%u: %.4f >= %.4f;  ", qv, k, fraction,
                    bound);
      detail << buf;
      if (!(bound > 0.0) || fraction < bound) ok = false;
      if (qv == 5 && k == 100 && std::abs(bound - 0.740) > 1e-3) ok = false;
    }
  }
  record(11, "Chebyshev check (q in {5,7}, k in {50,100}, 1e5 seeds, fixed RNG seed)", ok,
         detail.str(), t.seconds());
}

void criterion_12() {
  Timer t;
  // The exact limits of Theorems 3-4 are not desk-testable; this criterion
  // asserts the finite-k coverage: criteria 5, 8, 11 passed, plus the
  // absorbed-orbit equiparity window check.
  bool deps = true;
  for (const auto& r : g_results)
    if ((r.id == 5 || r.id == 8 || r.id == 11) && !r.pass) deps = false;

  bool window_ok = true;
  Multiplier q3(3);
  for (std::uint64_t n0 = 1; n0 <= 500; ++n0) {
    CqInt x = conjugate(q3, Int(static_cast<unsigned long>(n0)));
    std::size_t absorbed = 0;
    bool found = false;
    std::vector<int> bits;
    for (std::size_t j = 0; j < 600; ++j) {
      if (!found && (x.value() == 5 || x.value() == 9)) {
        absorbed = j;
        found = true;
      }
      bits.push_back(alpha_q(q3, x));
      x = f_map(q3, x);
    }
    if (!found) {
      window_ok = false;
      continue;
    }
    long ones = 0;
    for (std::size_t kp = 1; absorbed + kp <= bits.size(); ++kp) {
      ones += bits[absorbed + kp - 1];
      // post-absorption window: |mu - 1/2| <= 2/k'  <=>  |2 ones - k'| <= 4
      if (std::abs(2 * ones - static_cast<long>(kp)) > 4) window_ok = false;
    }
  }
  record(12,
         "Theorems 3-4 limits: not desk-reproducible; covered by criteria 5/8/11 + "
         "absorbed-orbit equiparity window",
         deps && window_ok,
         std::string("dependencies ") + (deps ? "passed" : "FAILED") +
             ", post-absorption windows within 1/2 +- 2/k' for n0 <= 500",
         t.seconds());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();

  int failures = 0;
  for (const auto& r : g_results) {
    if (!r.pass) ++failures;
    char line[2048];
    std::snprintf(line, sizeof line, "C%-2d %s  %s  [%.1fs]\n    %s", r.id,
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
    std::cout << line << "\n";
  }
  std::cout << "acceptance: " << (g_results.size() - failures) << "/" << g_results.size()
            << " criteria passed\n";
  return failures;
}
