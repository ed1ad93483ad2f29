#pragma once

// Exact elements of Z[w], w = exp(2 pi i / p), in the basis {1, w, ..., w^{p-2}}.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdslab {

class CycInt {
public:
  CycInt() = default;
  explicit CycInt(std::uint32_t p);  // zero
  static CycInt integer(std::uint32_t p, std::int64_t value);
  static CycInt root_power(std::uint32_t p, std::int64_t exponent);  // w^exponent
  // Coefficients given over all p powers of w; reduced to canonical form.
  static CycInt from_powers(std::uint32_t p, const std::vector<std::int64_t>& by_power);
  static CycInt from_coeffs(std::uint32_t p, std::vector<std::int64_t> coeffs);

  std::uint32_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  // Writes this as scale * w^exponent if possible (scale != 0).
  struct ScaledRoot {
    std::int64_t scale;
    std::uint32_t exponent;
  };
  std::optional<ScaledRoot> as_scaled_root() const;

  CycInt conj() const;  // w -> w^{-1}
  // Image under the Galois automorphism w -> w^t, t coprime to p.
  CycInt galois(std::uint32_t t) const;
  std::complex<double> to_complex() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(std::int64_t s);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, std::int64_t s) { return a *= s; }
  friend CycInt operator*(std::int64_t s, CycInt a) { return a *= s; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

private:
  void check_same(const CycInt& o) const;

  std::uint32_t p_ = 0;
  std::vector<std::int64_t> coeffs_;  // length p - 1
};

}  // namespace pdslab
