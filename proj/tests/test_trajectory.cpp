#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcollatz/trajectory.hpp"

using namespace qcollatz;

namespace {

Int f_pow(const Multiplier& q, const CqInt& x0, std::size_t k) {
  CqInt x = x0;
  for (std::size_t j = 0; j < k; ++j) x = f_map(q, x);
  return x.value();
}

std::uint64_t mix(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("iterate reproduces the paper's truncated sequences") {
  Multiplier q5(5), q3(3), q7(7);
  Trajectory t1 = iterate(q5, CqInt(q5, 57), 5);
  CHECK(t1.iterates == std::vector<Int>{57, 145, 73, 185, 465});
  CHECK(t1.max_value == 465);
  CHECK_FALSE(t1.capped);
  CHECK(t1.parity.to_string() == "10110");

  Trajectory t2 = iterate(q3, CqInt(q3, 9), 4);
  CHECK(t2.iterates == std::vector<Int>{9, 5, 9, 5});

  Trajectory t3 = iterate(q7, CqInt(q7, 13), 3);
  CHECK(t3.iterates == std::vector<Int>{13, 49, 25});
}

TEST_CASE("iterate size cap marks capped instead of erroring") {
  Multiplier q5(5);
  // from 57 the orbit reaches 465 (9 bits); cap at 8 bits inside the run
  Trajectory t = iterate(q5, CqInt(q5, 57), 5, 8);
  CHECK(t.capped);
  CHECK(t.length() == 4);  // 465 (9 bits) exceeds the cap
  CHECK(t.back() == 185);
  CHECK_THROWS_AS(iterate(q5, CqInt(q5, 57), 5, 4), std::domain_error);  // cap below seed
}

TEST_CASE("closed_form_power examples") {
  Multiplier q3(3), q5(5);
  CHECK(closed_form_power(q3, CqInt(q3, 5), ParityVector::from_string("10")).value() == 5);
  // (125*105 + 315)/128 = 105: periodic return of the Table-1 row-3 cycle
  CHECK(closed_form_power(q5, CqInt(q5, 105), ParityVector::from_string("1110000")).value() ==
        105);
  // the 4-bit vector of 57 lands on 465; the 5-bit one continues to F^5 = 233
  CHECK(closed_form_power(q5, CqInt(q5, 57), parity_vector(q5, CqInt(q5, 57), 4)).value() == 465);
  CHECK(closed_form_power(q5, CqInt(q5, 57), parity_vector(q5, CqInt(q5, 57), 5)).value() == 233);

  // wrong parity vector is signalled by inexact division
  CHECK_THROWS_AS(closed_form_power(q5, CqInt(q5, 57), ParityVector::from_string("0011")),
                  std::domain_error);
}

TEST_CASE("closed_form_product examples") {
  Multiplier q3(3), q5(5), q7(7);
  CHECK(closed_form_product(q3, iterate(q3, CqInt(q3, 5), 2)).value() == 5);
  CHECK(closed_form_product(q5, iterate(q5, CqInt(q5, 57), 4)).value() == 465);
  // final element of S^6_7(X_7(6)) = F^5(73)
  CHECK(closed_form_product(q7, iterate(q7, CqInt(q7, 73), 5)).value() == 5761);
}

TEST_CASE("Prop.-1 equivalence: power == product == iterated value (fuzz)") {
  const std::uint64_t qs[] = {3, 5, 7, 9, 181};
  std::uint64_t state = 42;
  for (int trial = 0; trial < 200; ++trial) {
    Multiplier q(qs[mix(state) % 5]);
    Int n0 = Int(static_cast<unsigned long>(mix(state) % 1000000 + 1));
    std::size_t k = 1 + mix(state) % 200;
    CqInt x0 = conjugate(q, n0);
    Trajectory traj = iterate(q, x0, k);
    REQUIRE_FALSE(traj.capped);
    Int direct = f_pow(q, x0, k);
    CHECK(closed_form_power(q, x0, traj.parity).value() == direct);
    CHECK(closed_form_product(q, traj).value() == direct);
    CHECK(f_map(q, CqInt::unchecked(traj.back())).value() == direct);
  }
}

TEST_CASE("stop_info") {
  Multiplier q3(3), q5(5);
  StopInfo s1 = stop_info(q3, conjugate(q3, 7), 100);  // x0 = 29
  CHECK(s1.stopping_time == 7);

  StopInfo s2 = stop_info(q3, conjugate(q3, 4), 10);
  CHECK(s2.stopping_time == 1);

  StopInfo s3 = stop_info(q5, CqInt(q5, 9), 10);
  CHECK(s3.total_steps_to_trivial == 5);
  CHECK_FALSE(s3.stopping_time.has_value());  // 9 is the global minimum of Z_c5

  // divergence-bound case: caps out with neither found
  StopInfo s4 = stop_info(q5, conjugate(q5, 7), 20);
  CHECK(s4.cap == 20);
}

TEST_CASE("check_growth_bounds: q=3 from 29") {
  Multiplier q3(3);
  Trajectory t = iterate(q3, CqInt(q3, 29), 5);
  BoundReport rep = check_growth_bounds(q3, t);
  CHECK(rep.k == 5);
  CHECK(rep.lower_ok);
  CHECK(rep.upper_checked);
  CHECK(rep.upper_violations.empty());
}

TEST_CASE("check_growth_bounds: trivial-cycle saturation and the excluded seed") {
  Multiplier q3(3);
  // seed 9: upper bound met with equality at even k (mu_k = 1/2)
  BoundReport r9 = check_growth_bounds(q3, iterate(q3, CqInt(q3, 9), 8));
  CHECK(r9.upper_checked);
  CHECK(r9.upper_violations.empty());
  CHECK(r9.lower_ok);

  // seed 5 = 2q-1 is excluded from the upper check
  BoundReport r5 = check_growth_bounds(q3, iterate(q3, CqInt(q3, 5), 8));
  CHECK_FALSE(r5.upper_checked);
  CHECK(r5.lower_ok);
}

TEST_CASE("check_growth_bounds: q=5 from 57 and non-Mersenne q=9") {
  Multiplier q5(5), q9(9);
  BoundReport r = check_growth_bounds(q5, iterate(q5, CqInt(q5, 57), 5));
  CHECK(r.lower_ok);
  CHECK(r.upper_checked);

  BoundReport r9 = check_growth_bounds(q9, iterate(q9, conjugate(q9, 7), 10));
  CHECK(r9.lower_ok);
  CHECK_FALSE(r9.upper_checked);  // q=9 is neither Mersenne nor 5
}

TEST_CASE("lower bound holds at every prefix of every scanned trajectory") {
  for (std::uint64_t qv : {3, 5, 7, 9}) {
    Multiplier q(qv);
    for (std::uint64_t n0 = 1; n0 <= 300; ++n0) {
      Trajectory t = iterate(q, conjugate(q, Int(static_cast<unsigned long>(n0))), 60);
      CHECK(check_growth_bounds(q, t).lower_ok);
    }
  }
}

TEST_CASE("no small seed carries an all-ones prefix (Lemma-8 restatement)") {
  for (std::uint64_t qv : {3, 5, 7, 9}) {
    Multiplier q(qv);
    // the unique length-64 all-ones representative lies far beyond the scan
    ParityVector ones = ParityVector::from_string(std::string(64, '1'));
    CHECK(seed_from_parity(q, ones) > 4096);
    for (std::uint64_t n0 = 1; n0 <= 4096; ++n0) {
      ParityVector pv =
          parity_vector(q, conjugate(q, Int(static_cast<unsigned long>(n0))), 64);
      CHECK_FALSE(pv.all_ones());
    }
  }
}
