#pragma once

// Independent oracles shared by the test suites. Everything here is written
// against the public element-level API only (no kernels, no tables).

#include <cstdint>
#include <map>
#include <vector>

#include "pdslab/bent.hpp"
#include "pdslab/cycint.hpp"
#include "pdslab/gf.hpp"
#include "pdslab/group.hpp"
#include "pdslab/pds.hpp"

namespace oracle {

using namespace pdslab;

// Counts x - y over ordered pairs of distinct elements, using group add/neg only.
inline std::vector<std::int64_t> difference_counts(const GroupSubset& d) {
  const auto& G = *d.group;
  std::vector<std::int64_t> counts(G.order(), 0);
  for (auto x : d.members)
    for (auto y : d.members)
      if (x != y) ++counts[G.add(x, G.neg(y))];
  return counts;
}

// (lambda, mu) if constant, otherwise nullopt. Empty classes give 0.
inline std::optional<std::pair<std::int64_t, std::int64_t>> pds_lambda_mu(const GroupSubset& d) {
  const auto counts = difference_counts(d);
  std::optional<std::int64_t> lambda, mu;
  for (std::uint32_t z = 1; z < d.group->order(); ++z) {
    auto& slot = d.contains(z) ? lambda : mu;
    if (!slot) slot = counts[z];
    else if (*slot != counts[z]) return std::nullopt;
  }
  return std::make_pair(lambda.value_or(0), mu.value_or(0));
}

// chi_b(D) by summing root_power one element at a time.
inline CycInt character_sum(const GroupSubset& d, std::uint32_t b) {
  const auto& G = *d.group;
  CycInt acc = CycInt::integer(G.p(), 0);
  for (auto x : d.members) acc += CycInt::root_power(G.p(), G.dot(b, x));
  return acc;
}

// W_f(b) = sum_x w^{f(x) + Tr(bx)} straight from the field.
inline CycInt walsh_naive(const PAryFunction& f, FieldElem b) {
  const FiniteField& F = f.field();
  CycInt acc = CycInt::integer(F.p(), 0);
  for (std::uint32_t code = 0; code < F.q(); ++code) {
    const FieldElem x{code};
    acc += CycInt::root_power(F.p(), static_cast<std::int64_t>(f(x)) + F.trace(F.mul(b, x)));
  }
  return acc;
}

// Sum of the monomials w^e over e in exps.
inline CycInt root_sum(std::uint32_t p, const std::vector<std::int64_t>& exps) {
  CycInt acc = CycInt::integer(p, 0);
  for (auto e : exps) acc += CycInt::root_power(p, e);
  return acc;
}

// Multiplicative order of a mod n (gcd(a, n) = 1).
inline std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n, k = 1;
  while (x != 1 % n) {
    x = x * a % n;
    ++k;
  }
  return k;
}

// Group-ring product of two integer subsets, counted pair by pair.
inline std::vector<std::int64_t> subset_product(const GroupSubset& a, const GroupSubset& b) {
  const auto& G = *a.group;
  std::vector<std::int64_t> out(G.order(), 0);
  for (auto x : a.members)
    for (auto y : b.members) ++out[G.add(x, y)];
  return out;
}

}  // namespace oracle
