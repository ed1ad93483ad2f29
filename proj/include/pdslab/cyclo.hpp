#pragma once

// Additive characters, cyclotomic classes and periods, uniform cyclotomy,
// and the quadratic Gauss constants r0 / n0.

#include <cstdint>
#include <optional>
#include <vector>

#include "pdslab/cycint.hpp"
#include "pdslab/gf.hpp"

namespace pdslab {

// psi_alpha(x) = w_p^{Tr(alpha x)}.
CycInt additive_character(const FiniteField& field, FieldElem alpha, FieldElem x);

// Smallest j >= 1 with p^j = -1 (mod e), or nullopt when -1 is not a power of p mod e.
std::optional<std::uint32_t> minimal_j(std::uint64_t p, std::uint64_t e);

class CyclotomicClasses {
public:
  CyclotomicClasses(const FiniteField& field, std::uint32_t e);

  const FiniteField& field() const { return *field_; }
  std::uint32_t order() const { return e_; }
  std::uint32_t class_size() const { return f_; }
  // dlog(a) mod e; throws on zero.
  std::uint32_t class_of(FieldElem a) const { return field_->log(a) % e_; }
  std::vector<FieldElem> members(std::uint32_t i) const;

private:
  const FiniteField* field_;
  std::uint32_t e_;
  std::uint32_t f_;
};

// eta_i = sum over C_i of psi_1, by direct summation.
std::vector<CycInt> cyclotomic_periods_direct(const CyclotomicClasses& classes);

enum class UniformCase { A, B };

struct UniformPeriods {
  UniformCase which;
  std::uint32_t j;
  std::uint32_t gamma;
  std::uint64_t q;
  std::int64_t sqrt_q;
  std::uint64_t f;
  std::vector<std::int64_t> periods;  // eta_0 .. eta_{e-1}
};

// Closed-form periods for q = p^{2 j gamma}, e | p^j + 1 with j minimal.
UniformPeriods uniform_periods_closed_form(std::uint64_t p, std::uint64_t e, std::uint32_t gamma);

struct GaussConstants {
  CycInt r0;  // sum of w^a over nonzero squares a
  CycInt n0;  // sum of w^a over nonsquares a
  std::int64_t p_star;  // (-1)^{(p-1)/2} p
};

GaussConstants gauss_constants(std::uint32_t p);

// Legendre symbol (a/p) for odd prime p: 0, 1 or -1.
int legendre(std::int64_t a, std::uint32_t p);

}  // namespace pdslab
