#include "pdslab/group.hpp"

#include <algorithm>
#include <string>

#include "pdslab/error.hpp"

namespace pdslab {

ElementaryAbelianGroup::ElementaryAbelianGroup(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim), order_(1) {
  if (!is_prime(p)) throw InvalidArgument("group exponent must be prime");
  if (p > kernels::kMaxDigitPrime)
    throw InvalidArgument("groups need p <= " + std::to_string(kernels::kMaxDigitPrime));
  const std::uint64_t cap = max_group_size();
  std::uint64_t order = 1;
  place_.resize(dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    place_[i] = static_cast<std::uint32_t>(order);
    order *= p;
    if (order > cap)
      throw InvalidArgument("group order " + std::to_string(p) + "^" + std::to_string(dim) +
                            " exceeds the size cap " + std::to_string(cap));
  }
  order_ = static_cast<std::uint32_t>(order);
  all_ = kernels::DigitPlanes(p, dim, order_);
  for (std::uint32_t i = 0; i < dim; ++i) {
    std::uint8_t* plane = all_.plane(i);
    for (std::uint32_t x = 0; x < order_; ++x) plane[x] = static_cast<std::uint8_t>(x / place_[i] % p);
  }
}

std::shared_ptr<const ElementaryAbelianGroup> ElementaryAbelianGroup::vector_space(const FiniteField& field,
                                                                                   std::uint32_t n) {
  if (n < 1) throw InvalidArgument("vector space dimension must be at least 1");
  return std::make_shared<const ElementaryAbelianGroup>(field.p(), field.k() * n);
}

std::vector<std::uint8_t> ElementaryAbelianGroup::digits(std::uint32_t index) const {
  if (index >= order_) throw InvalidArgument("group element index out of range");
  std::vector<std::uint8_t> out(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i, index /= p_) out[i] = static_cast<std::uint8_t>(index % p_);
  return out;
}

std::uint32_t ElementaryAbelianGroup::index_of(std::span<const std::uint8_t> digits) const {
  if (digits.size() != dim_) throw InvalidArgument("digit vector has wrong length");
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (digits[i] >= p_) throw InvalidArgument("digit out of range");
    index += digits[i] * place_[i];
  }
  return index;
}

std::uint32_t ElementaryAbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < dim_; ++i, a /= p_, b /= p_) {
    const std::uint32_t s = a % p_ + b % p_;
    out += (s >= p_ ? s - p_ : s) * place_[i];
  }
  return out;
}

std::uint32_t ElementaryAbelianGroup::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < dim_; ++i, a /= p_) {
    const std::uint32_t d = a % p_;
    out += (d ? p_ - d : 0) * place_[i];
  }
  return out;
}

std::uint32_t ElementaryAbelianGroup::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t ElementaryAbelianGroup::dot(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < dim_; ++i, a /= p_, b /= p_) acc += static_cast<std::uint64_t>(a % p_) * (b % p_);
  return static_cast<std::uint32_t>(acc % p_);
}

kernels::DigitPlanes ElementaryAbelianGroup::planes_of(std::span<const std::uint32_t> indices) const {
  kernels::DigitPlanes out(p_, dim_, indices.size());
  for (std::uint32_t i = 0; i < dim_; ++i) {
    const std::uint8_t* src = all_.plane(i);
    std::uint8_t* dst = out.plane(i);
    for (std::size_t j = 0; j < indices.size(); ++j) dst[j] = src[indices[j]];
  }
  return out;
}

GroupSubset::GroupSubset(GroupPtr g, std::vector<std::uint32_t> m) : group(std::move(g)), members(std::move(m)) {
  if (!group) throw InvalidArgument("subset needs a group");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidArgument("subset has duplicate members");
  if (!members.empty() && members.back() >= group->order()) throw InvalidArgument("subset member out of range");
}

bool GroupSubset::contains(std::uint32_t x) const { return std::binary_search(members.begin(), members.end(), x); }

std::vector<std::uint8_t> GroupSubset::indicator() const {
  std::vector<std::uint8_t> ind(group->order(), 0);
  for (auto x : members) ind[x] = 1;
  return ind;
}

std::optional<std::uint32_t> GroupSubset::asymmetry_witness() const {
  const auto ind = indicator();
  for (auto x : members)
    if (!ind[group->neg(x)]) return x;
  return std::nullopt;
}

GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
  if (!(*a.group == *b.group)) throw InvalidArgument("union of subsets of different groups");
  std::vector<std::uint32_t> m;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(), std::back_inserter(m));
  return GroupSubset(a.group, std::move(m));
}

// ---------------------------------------------------------------------------

GroupRingElem::GroupRingElem(GroupPtr group, std::uint32_t ring_prime) : group_(std::move(group)), r_(ring_prime) {
  if (!group_) throw InvalidArgument("group ring element needs a group");
  if (r_ != 1 && !is_prime(r_)) throw InvalidArgument("coefficient ring must be Z or Z[w_r] with r prime");
  coeffs_.assign(planes(), std::vector<std::int64_t>(group_->order(), 0));
}

GroupRingElem GroupRingElem::from_subset(const GroupSubset& s, std::uint32_t ring_prime) {
  GroupRingElem out(s.group, ring_prime);
  for (auto x : s.members) out.coeffs_[0][x] = 1;
  return out;
}

GroupRingElem GroupRingElem::identity(GroupPtr group, std::int64_t c, std::uint32_t ring_prime) {
  GroupRingElem out(std::move(group), ring_prime);
  out.coeffs_[0][0] = c;
  return out;
}

GroupRingElem GroupRingElem::all_ones(GroupPtr group, std::uint32_t ring_prime) {
  GroupRingElem out(std::move(group), ring_prime);
  std::fill(out.coeffs_[0].begin(), out.coeffs_[0].end(), 1);
  return out;
}

bool GroupRingElem::is_integral() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    for (auto c : coeffs_[j])
      if (c) return false;
  return true;
}

std::int64_t GroupRingElem::int_coeff(std::uint32_t x) const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j][x]) throw InvalidArgument("group ring coefficient is not a rational integer");
  return coeffs_[0][x];
}

CycInt GroupRingElem::coeff(std::uint32_t x) const {
  if (r_ < 2) throw InvalidArgument("integer group ring element has no cyclotomic coefficients");
  std::vector<std::int64_t> c(r_ - 1);
  for (std::uint32_t j = 0; j + 1 < r_; ++j) c[j] = coeffs_[j][x];
  return CycInt::from_coeffs(r_, std::move(c));
}

void GroupRingElem::set(std::uint32_t x, const CycInt& c) {
  if (c.p() != r_) throw InvalidArgument("coefficient ring mismatch");
  for (std::uint32_t j = 0; j + 1 < r_; ++j) coeffs_[j][x] = c.coeffs()[j];
}

void GroupRingElem::set(std::uint32_t x, std::int64_t c) {
  for (auto& plane : coeffs_) plane[x] = 0;
  coeffs_[0][x] = c;
}

void GroupRingElem::add_to(std::uint32_t x, std::int64_t c) { coeffs_[0][x] += c; }

GroupRingElem GroupRingElem::promote(std::uint32_t ring_prime) const {
  if (ring_prime == r_) return *this;
  if (r_ != 1) throw InvalidArgument("can only promote integer group ring elements");
  GroupRingElem out(group_, ring_prime);
  out.coeffs_[0] = coeffs_[0];
  return out;
}

void GroupRingElem::check_compatible(const GroupRingElem& o) const {
  if (!(*group_ == *o.group_)) throw InvalidArgument("group ring elements over different groups");
  if (r_ != o.r_) throw InvalidArgument("group ring elements over different coefficient rings");
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  if (r_ == 1 && o.r_ != 1) *this = promote(o.r_);
  const GroupRingElem& rhs = (o.r_ == 1 && r_ != 1) ? o.promote(r_) : o;
  check_compatible(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    for (std::size_t x = 0; x < coeffs_[j].size(); ++x) coeffs_[j][x] += rhs.coeffs_[j][x];
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  GroupRingElem neg = o;
  neg *= -1;
  return *this += neg;
}

GroupRingElem& GroupRingElem::operator*=(std::int64_t s) {
  for (auto& plane : coeffs_)
    for (auto& c : plane) c *= s;
  return *this;
}

GroupRingElem GroupRingElem::scaled(const CycInt& s) const {
  const GroupRingElem base = promote(s.p());
  GroupRingElem out(group_, s.p());
  for (std::uint32_t x = 0; x < group_->order(); ++x) {
    bool nonzero = false;
    for (const auto& plane : base.coeffs_) nonzero |= plane[x] != 0;
    if (nonzero) out.set(x, base.coeff(x) * s);
  }
  return out;
}

GroupRingElem operator*(const GroupRingElem& a_in, const GroupRingElem& b_in) {
  const std::uint32_t r = std::max(a_in.r_, b_in.r_);
  const GroupRingElem a = a_in.promote(r);
  const GroupRingElem b = b_in.promote(r);
  a.check_compatible(b);
  const ElementaryAbelianGroup& g = *a.group_;
  const std::uint32_t v = g.order();
  const std::uint32_t planes = a.planes();

  // Accumulate over all r powers of w, then fold w^{r-1} back into the basis.
  const std::uint32_t powers = r <= 1 ? 1 : r;
  std::vector<std::vector<std::int64_t>> acc(powers, std::vector<std::int64_t>(v, 0));
  std::vector<std::uint32_t> shifted(v);

  for (std::uint32_t x = 0; x < v; ++x) {
    bool any = false;
    for (std::uint32_t ia = 0; ia < planes; ++ia) any |= a.coeffs_[ia][x] != 0;
    if (!any) continue;
    // shifted[z] = z - x
    const auto shift = g.digits(x);
    kernels::translate_indices(g.all_elements(), shift, g.place(), shifted);
    for (std::uint32_t ia = 0; ia < planes; ++ia) {
      const std::int64_t ca = a.coeffs_[ia][x];
      if (!ca) continue;
      for (std::uint32_t ib = 0; ib < planes; ++ib) {
        const std::vector<std::int64_t>& bp = b.coeffs_[ib];
        std::vector<std::int64_t>& dst = acc[(ia + ib) % powers];
        for (std::uint32_t z = 0; z < v; ++z) dst[z] += ca * bp[shifted[z]];
      }
    }
  }

  GroupRingElem out(a.group_, r);
  if (r <= 1) {
    out.coeffs_[0] = std::move(acc[0]);
  } else {
    const std::vector<std::int64_t>& top = acc[r - 1];
    for (std::uint32_t j = 0; j + 1 < r; ++j)
      for (std::uint32_t z = 0; z < v; ++z) out.coeffs_[j][z] = acc[j][z] - top[z];
  }
  return out;
}

bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return !a.first_difference(b).has_value(); }

std::optional<std::uint32_t> GroupRingElem::first_difference(const GroupRingElem& o_in) const {
  const std::uint32_t r = std::max(r_, o_in.r_);
  const GroupRingElem lhs = promote(r);
  const GroupRingElem rhs = o_in.promote(r);
  lhs.check_compatible(rhs);
  for (std::uint32_t x = 0; x < group_->order(); ++x)
    for (std::size_t j = 0; j < lhs.coeffs_.size(); ++j)
      if (lhs.coeffs_[j][x] != rhs.coeffs_[j][x]) return x;
  return std::nullopt;
}

}  // namespace pdslab
