#include "pdslab/qform.hpp"

#include <string>

#include "pdslab/cyclo.hpp"
#include "pdslab/error.hpp"

namespace pdslab {

QuadraticForm::QuadraticForm(FiniteField field, std::vector<std::vector<FieldElem>> matrix)
    : field_(std::move(field)), n_(static_cast<std::uint32_t>(matrix.size())), matrix_(std::move(matrix)) {
  if (n_ == 0 || n_ % 2 != 0)
    throw InvalidArgument("quadratic forms must have even dimension n = 2m, got n = " + std::to_string(n_));
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (matrix_[i].size() != n_) throw InvalidArgument("quadratic form matrix must be square");
    for (std::uint32_t j = 0; j < n_; ++j) {
      field_.element(matrix_[i][j].code);
      if (j < i && matrix_[i][j].code != 0) throw InvalidArgument("quadratic form matrix must be upper triangular");
    }
  }
  group_ = ElementaryAbelianGroup::vector_space(field_, n_);
}

QuadraticForm QuadraticForm::standard_hyperbolic(const FiniteField& field, std::uint32_t m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  const std::uint32_t n = 2 * m;
  std::vector<std::vector<FieldElem>> M(n, std::vector<FieldElem>(n, field.zero()));
  for (std::uint32_t i = 0; i < m; ++i) M[2 * i][2 * i + 1] = field.one();
  return QuadraticForm(field, std::move(M));
}

std::pair<FieldElem, FieldElem> canonical_anisotropic_pair(const FiniteField& field) {
  // dlog order: 0, g^0, g^1, ...
  std::vector<FieldElem> order{field.zero()};
  for (std::uint32_t t = 0; t + 1 < field.q(); ++t) order.push_back(field.exp_g(t));
  for (FieldElem b : order) {
    for (FieldElem c : order) {
      bool has_root = false;
      for (std::uint32_t code = 0; code < field.q() && !has_root; ++code) {
        const FieldElem t{code};
        const FieldElem val = field.add(field.add(field.mul(t, t), field.mul(b, t)), c);
        has_root = val.code == 0;
      }
      if (!has_root) return {b, c};
    }
  }
  throw InvariantViolation("no irreducible monic quadratic found");
}

QuadraticForm QuadraticForm::standard_elliptic(const FiniteField& field, std::uint32_t m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  const std::uint32_t n = 2 * m;
  std::vector<std::vector<FieldElem>> M(n, std::vector<FieldElem>(n, field.zero()));
  for (std::uint32_t i = 0; i + 1 < m; ++i) M[2 * i][2 * i + 1] = field.one();
  const auto [b, c] = canonical_anisotropic_pair(field);
  M[n - 2][n - 2] = field.one();
  M[n - 2][n - 1] = b;
  M[n - 1][n - 1] = c;
  return QuadraticForm(field, std::move(M));
}

QuadraticForm QuadraticForm::standard(const FiniteField& field, std::uint32_t m, FormKind kind) {
  return kind == FormKind::Hyperbolic ? standard_hyperbolic(field, m) : standard_elliptic(field, m);
}

FieldElem QuadraticForm::evaluate(const FieldVector& x) const {
  if (x.size() != n_) throw InvalidArgument("vector dimension does not match the form");
  FieldElem acc = field_.zero();
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (x[i].code == 0) continue;
    for (std::uint32_t j = i; j < n_; ++j) {
      if (matrix_[i][j].code == 0 || x[j].code == 0) continue;
      acc = field_.add(acc, field_.mul(matrix_[i][j], field_.mul(x[i], x[j])));
    }
  }
  return acc;
}

FieldElem QuadraticForm::polar(const FieldVector& x, const FieldVector& y) const {
  if (x.size() != n_ || y.size() != n_) throw InvalidArgument("vector dimension does not match the form");
  FieldVector s(n_);
  for (std::uint32_t i = 0; i < n_; ++i) s[i] = field_.add(x[i], y[i]);
  return field_.sub(field_.sub(evaluate(s), evaluate(x)), evaluate(y));
}

QuadraticForm QuadraticForm::scaled(FieldElem alpha) const {
  auto M = matrix_;
  for (auto& row : M)
    for (auto& e : row) e = field_.mul(alpha, e);
  return QuadraticForm(field_, std::move(M));
}

bool QuadraticForm::is_nonsingular() const {
  // Gram matrix of B: G_ij = M_ij + M_ji off the diagonal, 2 M_ii on it.
  std::vector<std::vector<FieldElem>> G(n_, std::vector<FieldElem>(n_));
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      G[i][j] = i == j ? field_.add(matrix_[i][i], matrix_[i][i]) : field_.add(matrix_[i][j], matrix_[j][i]);
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n_ && rank < n_; ++col) {
    std::uint32_t pivot = rank;
    while (pivot < n_ && G[pivot][col].code == 0) ++pivot;
    if (pivot == n_) continue;
    std::swap(G[pivot], G[rank]);
    const FieldElem inv = field_.inv(G[rank][col]);
    for (std::uint32_t r = 0; r < n_; ++r) {
      if (r == rank || G[r][col].code == 0) continue;
      const FieldElem factor = field_.mul(G[r][col], inv);
      for (std::uint32_t c = col; c < n_; ++c) G[r][c] = field_.sub(G[r][c], field_.mul(factor, G[rank][c]));
    }
    ++rank;
  }
  return rank == n_;
}

std::vector<FieldElem> QuadraticForm::value_table() const {
  const std::uint32_t v = group_->order();
  std::vector<FieldElem> out(v);
  for (std::uint32_t x = 0; x < v; ++x) out[x] = evaluate(vector_at(x));
  return out;
}

FieldVector QuadraticForm::vector_at(std::uint32_t index) const {
  if (index >= group_->order()) throw InvalidArgument("vector index out of range");
  FieldVector out(n_);
  for (std::uint32_t i = 0; i < n_; ++i, index /= field_.q()) out[i] = FieldElem{index % field_.q()};
  return out;
}

std::uint32_t QuadraticForm::index_of(const FieldVector& x) const {
  if (x.size() != n_) throw InvalidArgument("vector dimension does not match the form");
  std::uint32_t index = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i, place *= field_.q()) index += field_.element(x[i].code).code * place;
  return index;
}

FormType QuadraticForm::form_type() const {
  if (!is_nonsingular()) throw InvalidArgument("form_type needs a nonsingular form");
  const std::uint32_t q = field_.q();
  const std::uint32_t p = field_.p();
  std::vector<std::int64_t> count(q, 0);
  for (FieldElem u : value_table()) ++count[u.code];

  const auto qm = static_cast<std::int64_t>(ipow(q, m()));
  std::int64_t reference = 0;
  // sum_x psi_1(alpha Q(x)) = sum_u count[u] w^{Tr(alpha u)}, for every alpha != 0.
  for (std::uint32_t t = 0; t + 1 < q; ++t) {
    const FieldElem alpha = field_.exp_g(t);
    std::vector<std::int64_t> by_power(p, 0);
    for (std::uint32_t u = 0; u < q; ++u) by_power[field_.trace(field_.mul(alpha, FieldElem{u}))] += count[u];
    const auto s = CycInt::from_powers(p, by_power).as_integer();
    if (!s || (*s != qm && *s != -qm))
      throw InvariantViolation("exponential sum of a nonsingular form is not +-q^m");
    if (t == 0) reference = *s;
    else if (*s != reference) throw InvariantViolation("exponential sum changed under scaling the form");
  }
  return {reference > 0 ? 1 : -1, reference};
}

}  // namespace pdslab
