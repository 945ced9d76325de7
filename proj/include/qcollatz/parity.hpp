// Parity-vector algebra: partial/total parity, the ones-ratio, and both
// directions of the seed <-> vector bijection (Lemma-2 style bit lifting).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcollatz/core_maps.hpp"

namespace qcollatz {

// Finite bit string (alpha^0 .. alpha^{k-1}) with a suffix-sum cache:
// suffix_ones(j) = |A|_j^{k-1}. Serializes as a '0'/'1' string, leftmost
// bit = alpha^0.
class ParityVector {
 public:
  explicit ParityVector(std::vector<std::uint8_t> bits);
  static ParityVector from_string(std::string_view s);

  std::size_t length() const { return bits_.size(); }
  ParityBit bit(std::size_t j) const;

  // |A|_j^{k-1}; suffix_ones(k) == 0.
  std::uint64_t suffix_ones(std::size_t j) const;
  // P_k = |A|_0^{k-1}
  std::uint64_t total_parity() const { return suffix_[0]; }
  // |A|_i^j
  std::uint64_t partial_parity(std::size_t i, std::size_t j) const;
  // mu_k = P_k / k, exact
  Rat parity_coefficient() const;

  bool all_ones() const { return total_parity() == length(); }
  // true iff the vector is the d-fold repetition of some proper period d | k
  bool is_repetition() const;

  std::string to_string() const;

  friend bool operator==(const ParityVector& a, const ParityVector& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint64_t> suffix_;  // length k+1
};

// bits[j] = alpha_q(F_q^j(x0)) for j = 0..k-1.
ParityVector parity_vector(const Multiplier& q, const CqInt& x0, std::size_t k);

// The unique n0 in [1, 2^k] with parity_vector(q, X_q(n0), k) == A,
// found by lifting one bit per step (Lemma-2 congruence).
Int seed_from_parity(const Multiplier& q, const ParityVector& A);

inline constexpr std::uint64_t default_enum_budget = std::uint64_t{1} << 26;

struct BijectionReport {
  bool distinct = false;
  std::uint64_t count = 0;  // number of seeds enumerated (2^k)
};

// Enumerates all n0 in [1, 2^k] and checks their length-k parity vectors are
// pairwise distinct (hence all of {0,1}^k is hit).
BijectionReport verify_bijection(const Multiplier& q, unsigned k,
                                 std::uint64_t budget = default_enum_budget);

}  // namespace qcollatz
