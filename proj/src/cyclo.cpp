#include "pdslab/cyclo.hpp"

#include <numeric>
#include <string>

#include "pdslab/error.hpp"

namespace pdslab {

CycInt additive_character(const FiniteField& field, FieldElem alpha, FieldElem x) {
  return CycInt::root_power(field.p(), field.trace(field.mul(alpha, x)));
}

std::optional<std::uint32_t> minimal_j(std::uint64_t p, std::uint64_t e) {
  if (e < 2) throw InvalidArgument("cyclotomic order e must be at least 2");
  if (std::gcd(p, e) != 1)
    throw InvalidArgument("gcd(p, e) != 1 for p = " + std::to_string(p) + ", e = " + std::to_string(e));
  // Powers of p mod e cycle with period ord_e(p) <= e.
  std::uint64_t power = p % e;
  for (std::uint32_t j = 1; j <= e; ++j) {
    if ((power + 1) % e == 0) return j;
    if (power == 1) return std::nullopt;
    power = power * (p % e) % e;
  }
  return std::nullopt;
}

CyclotomicClasses::CyclotomicClasses(const FiniteField& field, std::uint32_t e)
    : field_(&field), e_(e), f_(0) {
  if (e < 1 || (field.q() - 1) % e != 0)
    throw InvalidArgument("cyclotomic order " + std::to_string(e) + " does not divide q - 1 = " +
                          std::to_string(field.q() - 1));
  f_ = (field.q() - 1) / e;
}

std::vector<FieldElem> CyclotomicClasses::members(std::uint32_t i) const {
  if (i >= e_) throw InvalidArgument("class index out of range");
  std::vector<FieldElem> out;
  out.reserve(f_);
  for (std::uint32_t j = 0; j < f_; ++j) out.push_back(field_->exp_g(static_cast<std::int64_t>(i + e_ * j)));
  return out;
}

std::vector<CycInt> cyclotomic_periods_direct(const CyclotomicClasses& classes) {
  const FiniteField& field = classes.field();
  const std::uint32_t p = field.p();
  // Histogram trace values per class, then assemble each period once.
  std::vector<std::vector<std::int64_t>> hist(classes.order(), std::vector<std::int64_t>(p, 0));
  for (std::uint32_t t = 0; t + 1 < field.q(); ++t) {
    const FieldElem z = field.exp_g(t);
    ++hist[t % classes.order()][field.trace(z)];
  }
  std::vector<CycInt> out;
  out.reserve(classes.order());
  for (const auto& h : hist) out.push_back(CycInt::from_powers(p, h));
  return out;
}

UniformPeriods uniform_periods_closed_form(std::uint64_t p, std::uint64_t e, std::uint32_t gamma) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (gamma < 1) throw InvalidArgument("gamma must be at least 1");
  const auto j = minimal_j(p, e);
  if (!j) throw InvalidArgument("no j with p^j = -1 mod e for p = " + std::to_string(p) + ", e = " + std::to_string(e));

  UniformPeriods out;
  out.j = *j;
  out.gamma = gamma;
  const std::uint64_t pj = ipow(p, *j);
  if ((pj + 1) % e != 0) throw InvariantViolation("minimal_j returned a j with e not dividing p^j + 1");
  const unsigned half = *j * gamma;
  if (half * 2 > 62) throw InvalidArgument("q = p^{2 j gamma} is too large");
  out.sqrt_q = static_cast<std::int64_t>(ipow(p, half));
  out.q = static_cast<std::uint64_t>(out.sqrt_q) * static_cast<std::uint64_t>(out.sqrt_q);
  out.f = (out.q - 1) / e;
  const auto ee = static_cast<std::int64_t>(e);
  const std::int64_t s = out.sqrt_q;

  const bool case_a = (gamma % 2 == 1) && (p % 2 == 1) && (((pj + 1) / e) % 2 == 1);
  out.periods.assign(e, 0);
  if (case_a) {
    out.which = UniformCase::A;
    // Odd p and odd (p^j + 1)/e force e even.
    if (e % 2 != 0) throw InvariantViolation("Case A reached with odd e");
    if ((s + 1) % ee != 0) throw InvariantViolation("Case A: e does not divide sqrt(q) + 1");
    const std::int64_t other = -(1 + s) / ee;
    for (auto& eta : out.periods) eta = other;
    out.periods[e / 2] = s - (s + 1) / ee;
  } else {
    out.which = UniformCase::B;
    const std::int64_t signed_root = (gamma % 2 == 0) ? s : -s;  // (-1)^gamma sqrt(q)
    if ((signed_root - 1) % ee != 0) throw InvariantViolation("Case B: e does not divide (-1)^gamma sqrt(q) - 1");
    const std::int64_t other = (signed_root - 1) / ee;
    for (auto& eta : out.periods) eta = other;
    out.periods[0] = -signed_root + other;
  }
  return out;
}

int legendre(std::int64_t a, std::uint32_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  std::int64_t r = ((a % pp) + pp) % pp;
  if (r == 0) return 0;
  // Euler's criterion.
  std::int64_t result = 1;
  std::int64_t base = r;
  std::int64_t e = (pp - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % pp;
    base = base * base % pp;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

GaussConstants gauss_constants(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("Gauss constants need an odd prime");
  std::vector<std::int64_t> squares(p, 0), nonsquares(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) {
    if (legendre(a, p) == 1) squares[a] = 1;
    else nonsquares[a] = 1;
  }
  const auto pp = static_cast<std::int64_t>(p);
  return {CycInt::from_powers(p, squares), CycInt::from_powers(p, nonsquares), (p % 4 == 1) ? pp : -pp};
}

}  // namespace pdslab
