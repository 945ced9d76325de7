#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace qcollatz {

// Odd multiplier q >= 3 of the qn+1 system, with the constants the parity
// predicate needs at every iteration step: 2(q-1), 4(q-1), and the Mersenne
// exponent p when q = 2^p - 1.
class Multiplier {
 public:
  explicit Multiplier(std::uint64_t q) : q_(q) {
    if (q < 3 || q % 2 == 0)
      throw std::domain_error("q must be odd and >= 3");
    if (q > max_q)
      throw std::domain_error("q too large (4(q-1) must fit in 64 bits)");
    two_qm1_ = 2 * (q - 1);
    four_qm1_ = 4 * (q - 1);
    // q + 1 a power of two <=> q Mersenne
    std::uint64_t qp1 = q + 1;
    if ((qp1 & (qp1 - 1)) == 0) {
      unsigned p = 0;
      while (qp1 > 1) {
        qp1 >>= 1;
        ++p;
      }
      mersenne_exp_ = p;
    }
  }

  static constexpr std::uint64_t max_q = (~std::uint64_t{0} >> 2) + 1;  // 4(q-1) <= 2^64-1

  std::uint64_t q() const { return q_; }
  std::uint64_t two_qm1() const { return two_qm1_; }
  std::uint64_t four_qm1() const { return four_qm1_; }
  std::optional<unsigned> mersenne_exp() const { return mersenne_exp_; }
  bool is_mersenne() const { return mersenne_exp_.has_value(); }

  bool operator==(const Multiplier& o) const { return q_ == o.q_; }

 private:
  std::uint64_t q_;
  std::uint64_t two_qm1_ = 0;
  std::uint64_t four_qm1_ = 0;
  std::optional<unsigned> mersenne_exp_;
};

}  // namespace qcollatz
