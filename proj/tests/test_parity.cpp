#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcollatz/parity.hpp"

using namespace qcollatz;

namespace {

// brute-force oracle for seed_from_parity: scan all n0 in [1, 2^k]
Int seed_by_scan(const Multiplier& q, const ParityVector& A) {
  const std::size_t k = A.length();
  const std::uint64_t lim = std::uint64_t{1} << k;
  for (std::uint64_t n0 = 1; n0 <= lim; ++n0) {
    if (parity_vector(q, conjugate(q, Int(static_cast<unsigned long>(n0))), k) == A)
      return Int(static_cast<unsigned long>(n0));
  }
  return 0;
}

ParityVector bits_of(std::uint64_t code, std::size_t k) {
  std::vector<std::uint8_t> bits(k);
  for (std::size_t j = 0; j < k; ++j) bits[j] = (code >> j) & 1;
  return ParityVector(std::move(bits));
}

}  // namespace

TEST_CASE("parity vector of the Table-1 cycles") {
  Multiplier q5(5), q3(3);
  CHECK(parity_vector(q5, CqInt(q5, 137), 7).to_string() == "1100100");
  CHECK(parity_vector(q3, CqInt(q3, 5), 2).to_string() == "10");
  CHECK(parity_vector(q5, CqInt(q5, 9), 5).to_string() == "11000");
}

TEST_CASE("partial parity and suffix sums") {
  ParityVector A = ParityVector::from_string("1100100");
  CHECK(A.partial_parity(0, 6) == 3);
  CHECK(A.partial_parity(2, 3) == 0);
  CHECK(A.total_parity() == 3);
  CHECK(A.suffix_ones(0) == 3);
  CHECK(A.suffix_ones(5) == 0);
  CHECK(A.suffix_ones(4) == 1);
  CHECK(A.suffix_ones(7) == 0);
  CHECK_THROWS_AS(A.partial_parity(3, 2), std::out_of_range);
  CHECK_THROWS_AS(A.partial_parity(0, 7), std::out_of_range);

  ParityVector B = ParityVector::from_string("10");
  CHECK(B.partial_parity(1, 1) == 0);

  // brute cross-check of the cache
  for (std::size_t i = 0; i < A.length(); ++i)
    for (std::size_t j = i; j < A.length(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t t = i; t <= j; ++t) s += A.bit(t);
      CHECK(A.partial_parity(i, j) == s);
    }
}

TEST_CASE("parity coefficient is an exact rational") {
  CHECK(ParityVector::from_string("10").parity_coefficient() == make_rat(1UL, 2UL));
  CHECK(ParityVector::from_string("1100100").parity_coefficient() == make_rat(3UL, 7UL));
  CHECK(ParityVector::from_string("11000").parity_coefficient() == make_rat(2UL, 5UL));
}

TEST_CASE("seed_from_parity matches the spec examples") {
  Multiplier q3(3), q5(5);
  CHECK(seed_from_parity(q3, ParityVector::from_string("1")) == 1);
  CHECK(seed_from_parity(q3, ParityVector::from_string("0")) == 2);
  CHECK(seed_from_parity(q3, ParityVector::from_string("11")) == 3);
  CHECK(seed_from_parity(q5, ParityVector::from_string("11000")) == 1);
}

TEST_CASE("seed_from_parity inverts parity_vector (exhaustive, k <= 12)") {
  for (std::uint64_t qv : {3, 5, 7, 9}) {
    Multiplier q(qv);
    for (std::size_t k : {1, 2, 3, 5, 8, 12}) {
      const std::uint64_t lim = std::uint64_t{1} << k;
      for (std::uint64_t n0 = 1; n0 <= lim; ++n0) {
        Int n(static_cast<unsigned long>(n0));
        ParityVector A = parity_vector(q, conjugate(q, n), k);
        CHECK(seed_from_parity(q, A) == n);
      }
    }
  }
}

TEST_CASE("seed_from_parity agrees with the brute-force oracle on random vectors") {
  Multiplier q7(7);
  std::uint64_t code = 0x9e3779b9;
  for (int trial = 0; trial < 50; ++trial) {
    code = code * 6364136223846793005ull + 1442695040888963407ull;
    std::size_t k = 1 + (code >> 60);  // 1..16
    ParityVector A = bits_of(code & ((std::uint64_t{1} << k) - 1), k);
    Int expected = seed_by_scan(q7, A);
    CHECK(expected > 0);
    CHECK(seed_from_parity(q7, A) == expected);
  }
}

TEST_CASE("Lemma-2 congruence: equal seeds mod 2^k share length-k vectors") {
  Multiplier q5(5);
  for (std::uint64_t n0 : {1ull, 7ull, 100ull, 513ull}) {
    for (std::size_t k : {3, 6, 10}) {
      Int a(static_cast<unsigned long>(n0));
      Int b = a + pow2(k);  // same residue mod 2^k <-> x-space offset (q-1)2^{k+1}
      CHECK(parity_vector(q5, conjugate(q5, a), k) == parity_vector(q5, conjugate(q5, b), k));
      // differing at a smaller modulus splits within k steps
      Int c = a + pow2(k - 1);
      CHECK_FALSE(parity_vector(q5, conjugate(q5, a), k) == parity_vector(q5, conjugate(q5, c), k));
    }
  }
}

TEST_CASE("verify_bijection") {
  CHECK(verify_bijection(Multiplier(3), 8).distinct);
  CHECK(verify_bijection(Multiplier(3), 8).count == 256);
  BijectionReport r7 = verify_bijection(Multiplier(7), 1);
  CHECK(r7.distinct);
  CHECK(r7.count == 2);
  BijectionReport r5 = verify_bijection(Multiplier(5), 10);
  CHECK(r5.distinct);
  CHECK(r5.count == 1024);
  CHECK_THROWS_AS(verify_bijection(Multiplier(3), 30, 1 << 20), budget_error);
}

TEST_CASE("distribution exactness: P_k counts are binomial (Lemma 2(iii))") {
  for (std::uint64_t qv : {3, 5, 7}) {
    Multiplier q(qv);
    const std::size_t k = 10;
    std::vector<std::uint64_t> counts(k + 1, 0);
    for (std::uint64_t n0 = 1; n0 <= (1u << k); ++n0)
      ++counts[parity_vector(q, conjugate(q, Int(static_cast<unsigned long>(n0))), k)
                    .total_parity()];
    for (std::size_t m = 0; m <= k; ++m) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, m);
      CHECK(Int(static_cast<unsigned long>(counts[m])) == binom);
    }
  }
}
