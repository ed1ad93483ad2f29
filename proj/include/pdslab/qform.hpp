#pragma once

// Quadratic forms Q(x) = sum_{i <= j} M_ij x_i x_j on V = F_q^n, n = 2m.

#include <cstdint>
#include <vector>

#include "pdslab/group.hpp"

namespace pdslab {

enum class FormKind { Hyperbolic, Elliptic };

struct FormType {
  int epsilon;           // +1 hyperbolic, -1 elliptic
  std::int64_t exp_sum;  // sum_x psi_1(Q(x)) = epsilon q^m
};

class QuadraticForm {
public:
  // matrix is n x n; entries below the diagonal must be zero.
  QuadraticForm(FiniteField field, std::vector<std::vector<FieldElem>> matrix);

  static QuadraticForm standard_hyperbolic(const FiniteField& field, std::uint32_t m);
  static QuadraticForm standard_elliptic(const FiniteField& field, std::uint32_t m);
  static QuadraticForm standard(const FiniteField& field, std::uint32_t m, FormKind kind);

  const FiniteField& field() const { return field_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return n_ / 2; }
  const std::vector<std::vector<FieldElem>>& matrix() const { return matrix_; }

  FieldElem evaluate(const FieldVector& x) const;
  FieldElem polar(const FieldVector& x, const FieldVector& y) const;
  QuadraticForm scaled(FieldElem alpha) const;  // alpha Q

  bool is_nonsingular() const;
  // Exact sum over V; throws unless it equals +-q^m, the same for every multiple alpha Q.
  FormType form_type() const;

  // Q evaluated at every element of V in group index order.
  std::vector<FieldElem> value_table() const;
  GroupPtr group() const { return group_; }
  FieldVector vector_at(std::uint32_t index) const;
  std::uint32_t index_of(const FieldVector& x) const;

private:
  FiniteField field_;
  std::uint32_t n_;
  std::vector<std::vector<FieldElem>> matrix_;
  GroupPtr group_;
};

// First (b, c) in dlog order with t^2 + b t + c irreducible over F_q.
std::pair<FieldElem, FieldElem> canonical_anisotropic_pair(const FiniteField& field);

}  // namespace pdslab
