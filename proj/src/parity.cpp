#include "qcollatz/parity.hpp"

#include <stdexcept>

namespace qcollatz {

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::domain_error("parity vector must have length >= 1");
  suffix_.assign(bits_.size() + 1, 0);
  for (std::size_t j = bits_.size(); j-- > 0;) {
    if (bits_[j] > 1) throw std::domain_error("parity bits must be 0 or 1");
    suffix_[j] = suffix_[j + 1] + bits_[j];
  }
}

ParityVector ParityVector::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::domain_error("parity string must be 0/1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return ParityVector(std::move(bits));
}

ParityBit ParityVector::bit(std::size_t j) const {
  if (j >= bits_.size()) throw std::out_of_range("parity index out of range");
  return bits_[j];
}

std::uint64_t ParityVector::suffix_ones(std::size_t j) const {
  if (j > bits_.size()) throw std::out_of_range("parity index out of range");
  return suffix_[j];
}

std::uint64_t ParityVector::partial_parity(std::size_t i, std::size_t j) const {
  if (i > j || j >= bits_.size()) throw std::out_of_range("partial_parity requires 0 <= i <= j < k");
  return suffix_[i] - suffix_[j + 1];
}

Rat ParityVector::parity_coefficient() const {
  return make_rat(static_cast<unsigned long>(total_parity()),
                  static_cast<unsigned long>(length()));
}

bool ParityVector::is_repetition() const {
  std::size_t k = bits_.size();
  for (std::size_t d = 1; d <= k / 2; ++d) {
    if (k % d != 0) continue;
    bool rep = true;
    for (std::size_t j = d; j < k && rep; ++j) rep = bits_[j] == bits_[j - d];
    if (rep) return true;
  }
  return false;
}

std::string ParityVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t j = 0; j < bits_.size(); ++j) s[j] = static_cast<char>('0' + bits_[j]);
  return s;
}

ParityVector parity_vector(const Multiplier& q, const CqInt& x0, std::size_t k) {
  if (k == 0) throw std::domain_error("parity vector length must be >= 1");
  std::vector<std::uint8_t> bits;
  bits.reserve(k);
  CqInt x = x0;
  for (std::size_t j = 0; j < k; ++j) {
    ParityBit a = alpha_q(q, x);
    bits.push_back(static_cast<std::uint8_t>(a));
    if (j + 1 < k) x = f_map(q, x);
  }
  return ParityVector(std::move(bits));
}

Int seed_from_parity(const Multiplier& q, const ParityVector& A) {
  // Adding 2^j to n0 leaves bits 0..j-1 unchanged and flips bit j; the
  // x-iterate at step j moves by 2(q-1) q^{P_j} (Lemma-2 congruence), so a
  // single forward pass fixes one bit per step.
  std::size_t k = A.length();
  Int n = A.bit(0) ? 1 : 2;
  Int x = conjugate(q, n).value();
  Int qpow = 1;  // q^{ones among bits 0..j-1}
  for (std::size_t j = 0; j < k; ++j) {
    if (j > 0) {
      CqInt cur = CqInt::unchecked(x);
      if (alpha_q(q, cur) != A.bit(j)) {
        n += pow2(static_cast<unsigned long>(j));
        x += qpow * q.two_qm1();
      }
    }
    if (j + 1 < k) {
      if (A.bit(j)) qpow *= q.q();
      x = f_map(q, CqInt::unchecked(std::move(x))).value();
    }
  }
  return n;
}

BijectionReport verify_bijection(const Multiplier& q, unsigned k, std::uint64_t budget) {
  if (k == 0 || k >= 63) throw budget_error("verify_bijection: k out of range");
  std::uint64_t total = std::uint64_t{1} << k;
  if (total > budget) throw budget_error("verify_bijection: 2^k exceeds enumeration budget");

  std::vector<bool> seen(total, false);
  BijectionReport rep;
  rep.count = total;
  rep.distinct = true;
  for (std::uint64_t n0 = 1; n0 <= total; ++n0) {
    // vector-as-integer: bit j of code = alpha at step j
    Int n = static_cast<unsigned long>(n0);
    std::uint64_t code = 0;
    for (unsigned j = 0; j < k; ++j) {
      code |= static_cast<std::uint64_t>(mpz_odd_p(n.get_mpz_t()) ? 1 : 0) << j;
      if (j + 1 < k) n = t_map(q, n);
    }
    if (seen[code]) {
      rep.distinct = false;
      return rep;
    }
    seen[code] = true;
  }
  return rep;
}

}  // namespace qcollatz
