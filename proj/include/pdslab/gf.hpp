#pragma once

// Finite fields F_{p^k} backed by log/antilog tables.
//
// Elements are stored in the power basis of a root x of a primitive modulus.
// The coordinate vector (c_0, ..., c_{k-1}) is packed into one integer
// code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so 0 has code 0, 1 has code 1,
// and the prime subfield F_p is exactly the codes [0, p).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pdslab {

inline constexpr std::uint64_t kDefaultMaxFieldSize = 1u << 20;

struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

using FieldVector = std::vector<FieldElem>;

// Cap on p^k and on group orders; PDSLAB_MAX_GROUP overrides the default.
std::uint64_t max_group_size();

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t ipow(std::uint64_t base, unsigned exp);

class FiniteField {
public:
  // Lexicographically smallest primitive modulus of degree k (g = x), or
  // x - g with g the smallest primitive root when k = 1.
  FiniteField(std::uint32_t p, std::uint32_t k);

  // Rebuild from a stored descriptor; the modulus must be primitive.
  static FiniteField from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Low-to-high coefficients c_0..c_k of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem generator() const { return antilog_[1 % (q_ - 1)]; }
  FieldElem from_int(std::int64_t a) const;  // image of an integer in F_p
  FieldElem element(std::uint32_t code) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::int64_t e) const;
  // g^e for any integer e.
  FieldElem exp_g(std::int64_t e) const;

  std::uint32_t log(FieldElem a) const;  // throws on zero
  std::uint32_t trace(FieldElem a) const { check(a); return trace_[a.code]; }
  bool is_square(FieldElem a) const;  // 0 counts as a square

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  std::string describe() const;  // e.g. "GF(3^2)"

private:
  FiniteField() = default;
  void build_tables();
  void check(FieldElem a) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;     // p^i, i < k
  std::vector<std::int32_t> log_;        // log_[code], -1 for zero
  std::vector<FieldElem> antilog_;       // antilog_[e] = g^e, e < q-1
  std::vector<std::uint32_t> trace_;     // trace_[code]
};

}  // namespace pdslab
