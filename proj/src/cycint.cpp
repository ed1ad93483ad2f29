#include "pdslab/cycint.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pdslab/error.hpp"
#include "pdslab/gf.hpp"

namespace pdslab {

CycInt::CycInt(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidArgument("cyclotomic integers need a prime order, got " + std::to_string(p));
  coeffs_.assign(p - 1, 0);
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t value) {
  CycInt out(p);
  out.coeffs_[0] = value;
  return out;
}

CycInt CycInt::root_power(std::uint32_t p, std::int64_t exponent) {
  std::vector<std::int64_t> by_power(p, 0);
  const auto pp = static_cast<std::int64_t>(p);
  by_power[static_cast<std::size_t>(((exponent % pp) + pp) % pp)] = 1;
  return from_powers(p, by_power);
}

CycInt CycInt::from_powers(std::uint32_t p, const std::vector<std::int64_t>& by_power) {
  if (by_power.size() != p) throw InvalidArgument("power vector must have length p");
  CycInt out(p);
  // w^{p-1} = -(1 + w + ... + w^{p-2})
  const std::int64_t top = by_power[p - 1];
  for (std::uint32_t j = 0; j + 1 < p; ++j) out.coeffs_[j] = by_power[j] - top;
  return out;
}

CycInt CycInt::from_coeffs(std::uint32_t p, std::vector<std::int64_t> coeffs) {
  CycInt out(p);
  if (coeffs.size() != p - 1) throw InvalidArgument("CycInt needs p - 1 coefficients");
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycInt::is_zero() const {
  for (auto c : coeffs_)
    if (c) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j]) return std::nullopt;
  return coeffs_.empty() ? 0 : coeffs_[0];
}

std::optional<CycInt::ScaledRoot> CycInt::as_scaled_root() const {
  if (p_ == 2) {
    // w = -1, so every integer is a scaled root with exponent 0.
    if (coeffs_[0] == 0) return std::nullopt;
    return ScaledRoot{coeffs_[0], 0};
  }
  std::size_t nonzero = 0;
  std::size_t where = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j]) {
      ++nonzero;
      where = j;
    }
  if (nonzero == 1) return ScaledRoot{coeffs_[where], static_cast<std::uint32_t>(where)};
  // c * w^{p-1} has every coordinate equal to -c.
  if (nonzero == coeffs_.size()) {
    for (auto c : coeffs_)
      if (c != coeffs_[0]) return std::nullopt;
    return ScaledRoot{-coeffs_[0], p_ - 1};
  }
  return std::nullopt;
}

CycInt CycInt::galois(std::uint32_t t) const {
  if (t % p_ == 0) throw InvalidArgument("Galois exponent must be coprime to p");
  std::vector<std::int64_t> by_power(p_, 0);
  for (std::uint32_t j = 0; j + 1 < p_; ++j)
    by_power[static_cast<std::size_t>(static_cast<std::uint64_t>(j) * t % p_)] += coeffs_[j];
  return from_powers(p_, by_power);
}

CycInt CycInt::conj() const { return galois(p_ - 1); }

std::complex<double> CycInt::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    acc += static_cast<double>(coeffs_[j]) *
           std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_));
  return acc;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_)
    throw InvalidArgument("mixed cyclotomic orders " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> by_power(p, 0);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    if (!a.coeffs_[i]) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
      const std::uint32_t e = (i + j) % p;
      by_power[e] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycInt::from_powers(p, by_power);
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const auto c = coeffs_[j];
    if (!c) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (j == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "w";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pdslab
