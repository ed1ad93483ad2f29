#pragma once

// Walsh analysis of p-ary functions f: F_{p^n} -> F_p (p odd), level sets,
// and the group-ring elements L_t = sum_i D_i w^{it}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/group.hpp"

namespace pdslab {

class PAryFunction {
public:
  // values[code] = f(element with that code).
  PAryFunction(FiniteField field, std::vector<std::uint32_t> values);

  // Table in the file order (0, g^0, g^1, ...).
  static PAryFunction from_dlog_order(FiniteField field, const std::vector<std::uint32_t>& values);
  std::vector<std::uint32_t> to_dlog_order() const;

  // f(x) = Tr(scale * x^2).
  static PAryFunction trace_quadratic(const FiniteField& field, FieldElem scale);

  const FiniteField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  std::uint32_t n() const { return field_.k(); }
  std::uint32_t size() const { return field_.q(); }
  std::uint32_t operator()(FieldElem x) const { return values_[x.code]; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  GroupPtr group() const { return group_; }

  friend bool operator==(const PAryFunction& a, const PAryFunction& b) {
    return a.field_ == b.field_ && a.values_ == b.values_;
  }

private:
  FiniteField field_;
  std::vector<std::uint32_t> values_;
  GroupPtr group_;
};

enum class BentClass {
  NotBent,
  BentWeaklyRegular,       // W_f(b) = u (p*)^{n/2} w^{f*(b)}, u = +-1 (includes regular)
  BentNotWeaklyRegular,
  BentUnclassifiedOddN,    // bent, but n odd: normal form not extracted
};

std::string to_string(BentClass c);

struct WalshSpectrum {
  std::vector<CycInt> coefficients;  // indexed by the code of b
  BentClass classification = BentClass::NotBent;
  int u = 0;                         // set when weakly regular
  bool regular = false;              // u (p*)^{n/2} = p^{n/2}, i.e. W_f(b) = p^{n/2} w^{f*(b)}
  std::optional<PAryFunction> dual;  // f*

  bool is_bent() const { return classification != BentClass::NotBent; }
  bool is_weakly_regular() const { return classification == BentClass::BentWeaklyRegular; }
};

WalshSpectrum walsh_spectrum(const PAryFunction& f);

// Smallest k in [1, p-1] with gcd(k-1, p-1) = 1 and f(tx) = t^k f(x).
std::optional<std::uint32_t> homogeneity_degree(const PAryFunction& f);

// l = k (k-1)^{-1} mod p.
std::uint32_t dual_degree(std::uint32_t k, std::uint32_t p);

// (s^{1-l} + t^{1-l})^{1/(1-l)} in F_p, exponents taken mod p-1.
std::uint32_t product_level(std::uint32_t s, std::uint32_t t, std::uint32_t l, std::uint32_t p);

// D_0 .. D_{p-1}.
std::vector<GroupSubset> level_sets(const PAryFunction& f);

GroupRingElem build_L(const PAryFunction& f, std::uint32_t t);

struct LevelProductCheck {
  int part;           // 1, 2 or 3
  std::uint32_t t;    // part 3: unused
  std::uint32_t s;    // part 1 only
  std::uint32_t a;    // part 3 only
  bool pass;
};

struct LevelProductReport {
  int u = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::vector<LevelProductCheck> checks;
  bool all_pass() const;
};

// Exact group-ring checks of the products of the L_t:
//   part 1: L_t L_s = u (tsv/p)^n (p*)^{n/2} L_v for t, s, t + s nonzero, v = product_level(s, t, l, p)
//   part 2: L_t L_{-t} = p^n [0]
//   part 3: sum_{t != 0} L_t L_0 w^{-at} = (p |D_a| - p^n) F
// Throws InvalidArgument naming the unmet precondition.
LevelProductReport verify_level_products(const PAryFunction& f);

}  // namespace pdslab
