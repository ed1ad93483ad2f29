#pragma once

// Partial difference set constructions and the two independent certifiers:
// brute-force difference counting and the character-value criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdslab/bent.hpp"
#include "pdslab/cyclo.hpp"
#include "pdslab/group.hpp"
#include "pdslab/qform.hpp"

namespace pdslab {

struct LatinType {
  int epsilon;  // +1 Latin square type, -1 negative Latin square type
  std::int64_t N;
  std::int64_t R;
  friend bool operator==(const LatinType&, const LatinType&) = default;
};

struct PdsParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::optional<LatinType> latin;

  // k^2 = mu v + (lambda - mu) k + (k - mu)
  bool counting_identity() const;
  // k (k - lambda - 1) = (v - k - 1) mu
  bool srg_feasible() const;
  bool same_parameters(const PdsParams& o) const {
    return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
  }
  std::string to_string() const;
};

// (N^2, (N - eps) R, eps N + R^2 - 3 eps R, R^2 - eps R), with latin filled in.
PdsParams latin_params(int epsilon, std::int64_t N, std::int64_t R);
std::optional<LatinType> classify_latin_type(const PdsParams& params);

struct Construction {
  GroupSubset set;
  PdsParams predicted;
};

// Shared by the cyclotomic constructions: the field F_q with
// q = p^{2 j gamma}, the standard form on V = F_q^{2m}, and Q's value table.
class CyclotomicSetup {
public:
  CyclotomicSetup(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m, FormKind kind);

  const FiniteField& field() const { return field_; }
  const QuadraticForm& form() const { return form_; }
  const std::vector<FieldElem>& values() const { return values_; }
  GroupPtr group() const { return form_.group(); }
  std::uint32_t e() const { return e_; }
  std::uint32_t j() const { return j_; }
  std::uint32_t q() const { return field_.q(); }
  std::uint32_t m() const { return form_.m(); }
  std::uint64_t f() const { return (field_.q() - 1) / e_; }
  int epsilon() const { return epsilon_; }

  GroupSubset zero_set() const;                     // D_0 = {x : Q(x) = 0}
  GroupSubset class_set(std::uint32_t i) const;     // D_{C_i}
  // {x : alpha Q(x) in C_i}
  GroupSubset scaled_class_set(FieldElem alpha, std::uint32_t i) const;
  PdsParams predicted() const;  // common parameters of every D_{C_i}

private:
  FiniteField field_;
  std::uint32_t e_;
  std::uint32_t j_;
  QuadraticForm form_;
  std::vector<FieldElem> values_;
  int epsilon_;
};

Construction construct_cyclotomic_pds(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m,
                                      FormKind kind, std::uint32_t i);
Construction construct_affine_polar(const FiniteField& field, std::uint32_t m, FormKind kind);
Construction construct_rt2(const QuadraticForm& form);

struct BentPdsCertificate {
  int proof_case = 0;      // 1: p = 1 mod 4, 2: p = 3 mod 4
  int u = 0;
  std::uint32_t k = 0;
  std::int64_t c = 0;      // u (p*)^{n/2}
  bool lr_squared = false;  // L_R^2 identity
  bool ln_squared = false;  // L_N^2 identity
  bool lr_ln = false;       // L_R L_N identity
  bool dr_identity = false; // (p D_R - (p-1)/2 F)^2 = (p^2-1)/4 p^n + c (p D_R - (p-1)/2 F)
  bool dn_identity = false;
  bool d0_identity = false; // p^2 D_0^2 = (-p^n + 2p|D_0| - c(p-2)) F + p(p-2) c D_0 + (p-1) p^n
  std::vector<std::int64_t> predicted_eigenvalues;  // of D_R and D_N
  bool all_pass() const {
    return lr_squared && ln_squared && lr_ln && dr_identity && dn_identity && d0_identity;
  }
};

struct BentPds {
  GroupSubset d0_minus;
  GroupSubset d_r;
  GroupSubset d_n;
  BentPdsCertificate certificate;
};

// Throws InvalidArgument naming the failed precondition.
BentPds construct_bent_pds(const PAryFunction& f);

enum class PdsFailure { None, ContainsIdentity, Asymmetric, LambdaNotConstant, MuNotConstant,
                        NonIntegralCharacter, TooManyCharacterValues, WrongCharacterValue, CountingIdentity };

std::string to_string(PdsFailure f);

struct BruteForceResult {
  bool ok = false;
  bool degenerate = false;
  PdsParams params;
  PdsFailure failure = PdsFailure::None;
  std::optional<std::uint32_t> witness;  // group element
  std::int64_t witness_count = 0;         // its difference count
  std::int64_t expected_count = 0;        // count seen on the first element of its kind
};

BruteForceResult verify_pds_bruteforce(const GroupSubset& d);

// chi_b(D) = sum_{d in D} w^{<b, d>} for every b, indexed by b.
std::vector<CycInt> character_values(const GroupSubset& d);

struct CharacterResult {
  bool ok = false;
  bool degenerate = false;
  PdsParams params;
  std::vector<std::int64_t> eigenvalues;  // nonprincipal values allowed, descending
  PdsFailure failure = PdsFailure::None;
  std::optional<std::uint32_t> witness;  // character index b, or group element for set defects
};

// With stated parameters: throws InvalidArgument if they violate the counting
// identity or (lambda - mu)^2 + 4(k - mu) is not a perfect square.
CharacterResult verify_pds_characters(const GroupSubset& d, const PdsParams& params);
// Without parameters: infers (lambda, mu) from the observed character values.
CharacterResult verify_pds_characters(const GroupSubset& d);

// Seeded perturbations that keep 0 out and -D = D. Orbits are {x, -x}.
// Swap one orbit of D for one outside D u {0}; throws if either side is empty.
GroupSubset swap_perturbation(const GroupSubset& d, std::uint64_t seed);
// One of: swap, remove an orbit, add an orbit.
GroupSubset random_perturbation(const GroupSubset& d, std::uint64_t seed);

// Cayley graph exports.
std::string cayley_edge_list(const GroupSubset& d);
std::string cayley_adjacency_csv(const GroupSubset& d);

}  // namespace pdslab
