#pragma once

// The additive group (F_p^N, +), subsets of it, and its group ring with
// coefficients in Z or Z[w_r].
//
// Element indices are base-p integers: index(x) = sum_i x_i p^i. For
// V = F_q^n with q = p^k this is sum_i code(v_i) q^i, so the F_p-coordinates
// of a vector are the base-p digits of its index.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pdslab/cycint.hpp"
#include "pdslab/gf.hpp"
#include "pdslab/kernels.hpp"

namespace pdslab {

class ElementaryAbelianGroup {
public:
  ElementaryAbelianGroup(std::uint32_t p, std::uint32_t dim);

  // V = F_q^n viewed as F_p^{kn}.
  static std::shared_ptr<const ElementaryAbelianGroup> vector_space(const FiniteField& field, std::uint32_t n);

  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t order() const { return order_; }
  std::span<const std::uint32_t> place() const { return place_; }

  std::vector<std::uint8_t> digits(std::uint32_t index) const;
  std::uint32_t index_of(std::span<const std::uint8_t> digits) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  // sum_i a_i b_i mod p; defines the character chi_b(x) = w^{<b,x>}.
  std::uint32_t dot(std::uint32_t a, std::uint32_t b) const;

  // Digit planes of every element 0..order-1, in index order.
  const kernels::DigitPlanes& all_elements() const { return all_; }
  kernels::DigitPlanes planes_of(std::span<const std::uint32_t> indices) const;

  bool operator==(const ElementaryAbelianGroup& o) const { return p_ == o.p_ && dim_ == o.dim_; }

private:
  std::uint32_t p_;
  std::uint32_t dim_;
  std::uint32_t order_;
  std::vector<std::uint32_t> place_;
  kernels::DigitPlanes all_;
};

using GroupPtr = std::shared_ptr<const ElementaryAbelianGroup>;

struct GroupSubset {
  GroupPtr group;
  std::vector<std::uint32_t> members;  // sorted, distinct

  GroupSubset() = default;
  // Sorts and validates the member list.
  GroupSubset(GroupPtr g, std::vector<std::uint32_t> m);

  std::size_t size() const { return members.size(); }
  bool contains(std::uint32_t x) const;
  std::vector<std::uint8_t> indicator() const;
  // First d in the set with -d not in the set, or nullopt if -D = D.
  std::optional<std::uint32_t> asymmetry_witness() const;
};

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b);

// Element of Z[G] (ring_prime == 1) or Z[w_r][G] (ring_prime r >= 2),
// stored as one dense coefficient plane per basis power of w_r.
class GroupRingElem {
public:
  GroupRingElem(GroupPtr group, std::uint32_t ring_prime);

  static GroupRingElem from_subset(const GroupSubset& s, std::uint32_t ring_prime = 1);
  static GroupRingElem identity(GroupPtr group, std::int64_t c, std::uint32_t ring_prime = 1);
  static GroupRingElem all_ones(GroupPtr group, std::uint32_t ring_prime = 1);

  const GroupPtr& group() const { return group_; }
  std::uint32_t ring_prime() const { return r_; }
  bool is_integral() const;  // all coefficients rational integers

  std::int64_t int_coeff(std::uint32_t x) const;  // throws if not an integer
  CycInt coeff(std::uint32_t x) const;            // requires ring_prime >= 2
  void set(std::uint32_t x, const CycInt& c);
  void set(std::uint32_t x, std::int64_t c);
  void add_to(std::uint32_t x, std::int64_t c);

  // Same element with coefficients viewed in Z[w_r].
  GroupRingElem promote(std::uint32_t ring_prime) const;

  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  GroupRingElem& operator*=(std::int64_t s);
  GroupRingElem scaled(const CycInt& s) const;
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(GroupRingElem a, std::int64_t s) { return a *= s; }
  friend GroupRingElem operator*(std::int64_t s, GroupRingElem a) { return a *= s; }
  // Convolution: (ab)[z] = sum_x a[x] b[z - x].
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b);

  // Index of an element where the two differ, or nullopt.
  std::optional<std::uint32_t> first_difference(const GroupRingElem& o) const;

private:
  void check_compatible(const GroupRingElem& o) const;
  std::uint32_t planes() const { return r_ <= 1 ? 1 : r_ - 1; }

  GroupPtr group_;
  std::uint32_t r_;
  std::vector<std::vector<std::int64_t>> coeffs_;  // [plane][element]
};

}  // namespace pdslab
