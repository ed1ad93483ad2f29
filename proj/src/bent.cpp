#include "pdslab/bent.hpp"

#include <numeric>
#include <tuple>

#include "pdslab/cyclo.hpp"
#include "pdslab/error.hpp"

namespace pdslab {

namespace {

std::uint32_t powmod_small(std::uint64_t b, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Inverse of a mod m, or nullopt if not invertible.
std::optional<std::uint32_t> inverse_mod(std::int64_t a, std::int64_t m) {
  a = ((a % m) + m) % m;
  std::int64_t g = m, x = 0, y = 1, r = a;
  while (r) {
    const std::int64_t qt = g / r;
    std::tie(g, r) = std::make_pair(r, g - qt * r);
    std::tie(x, y) = std::make_pair(y, x - qt * y);
  }
  if (g != 1) return std::nullopt;
  return static_cast<std::uint32_t>(((x % m) + m) % m);
}

void require_odd(std::uint32_t p) {
  if (p == 2) throw InvalidArgument("p-ary bent machinery requires an odd prime p");
}

}  // namespace

PAryFunction::PAryFunction(FiniteField field, std::vector<std::uint32_t> values)
    : field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != field_.q()) throw InvalidArgument("function table must have p^n entries");
  for (auto v : values_)
    if (v >= field_.p()) throw InvalidArgument("function value outside F_p");
  group_ = ElementaryAbelianGroup::vector_space(field_, 1);
}

PAryFunction PAryFunction::from_dlog_order(FiniteField field, const std::vector<std::uint32_t>& values) {
  if (values.size() != field.q()) throw InvalidArgument("function table must have p^n entries");
  std::vector<std::uint32_t> by_code(field.q());
  by_code[0] = values[0];
  for (std::uint32_t t = 0; t + 1 < field.q(); ++t) by_code[field.exp_g(t).code] = values[t + 1];
  return PAryFunction(std::move(field), std::move(by_code));
}

std::vector<std::uint32_t> PAryFunction::to_dlog_order() const {
  std::vector<std::uint32_t> out(size());
  out[0] = values_[0];
  for (std::uint32_t t = 0; t + 1 < size(); ++t) out[t + 1] = values_[field_.exp_g(t).code];
  return out;
}

PAryFunction PAryFunction::trace_quadratic(const FiniteField& field, FieldElem scale) {
  std::vector<std::uint32_t> values(field.q());
  for (std::uint32_t code = 0; code < field.q(); ++code) {
    const FieldElem x{code};
    values[code] = field.trace(field.mul(scale, field.mul(x, x)));
  }
  return PAryFunction(field, std::move(values));
}

std::string to_string(BentClass c) {
  switch (c) {
    case BentClass::NotBent: return "not_bent";
    case BentClass::BentWeaklyRegular: return "bent_weakly_regular";
    case BentClass::BentNotWeaklyRegular: return "bent_not_weakly_regular";
    case BentClass::BentUnclassifiedOddN: return "bent_unclassified_odd_n";
  }
  return "unknown";
}

WalshSpectrum walsh_spectrum(const PAryFunction& f) {
  const FiniteField& F = f.field();
  const std::uint32_t p = F.p();
  const std::uint32_t n = F.k();
  const std::uint32_t q = F.q();
  require_odd(p);
  const ElementaryAbelianGroup& G = *f.group();

  std::vector<std::uint8_t> fvals(q);
  for (std::uint32_t x = 0; x < q; ++x) fvals[x] = static_cast<std::uint8_t>(f.values()[x]);

  WalshSpectrum out;
  out.coefficients.reserve(q);
  std::vector<std::uint8_t> exps(q);
  std::vector<std::uint8_t> trace_coeffs(n);
  for (std::uint32_t b = 0; b < q; ++b) {
    // Tr(b x) = sum_j x_j Tr(b p^j-basis element).
    std::uint32_t basis = 1;
    for (std::uint32_t j = 0; j < n; ++j, basis *= p)
      trace_coeffs[j] = static_cast<std::uint8_t>(F.trace(F.mul(FieldElem{b}, FieldElem{basis})));
    kernels::dot_mod_p(G.all_elements(), trace_coeffs, fvals, exps);
    std::vector<std::int64_t> hist(p, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++hist[exps[x]];
    out.coefficients.push_back(CycInt::from_powers(p, hist));
  }

  const auto pn = static_cast<std::int64_t>(q);
  for (const auto& w : out.coefficients) {
    if (w * w.conj() != CycInt::integer(p, pn)) {
      out.classification = BentClass::NotBent;
      return out;
    }
  }
  if (n % 2 != 0) {
    out.classification = BentClass::BentUnclassifiedOddN;
    return out;
  }

  const std::int64_t p_star = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
  std::int64_t norm = 1;  // (p*)^{n/2}
  for (std::uint32_t i = 0; i < n / 2; ++i) norm *= p_star;

  std::vector<std::uint32_t> dual(q);
  int u = 0;
  for (std::uint32_t b = 0; b < q; ++b) {
    const auto root = out.coefficients[b].as_scaled_root();
    const int ub = !root ? 0 : root->scale == norm ? 1 : root->scale == -norm ? -1 : 0;
    if (ub == 0 || (u != 0 && ub != u)) {
      out.classification = BentClass::BentNotWeaklyRegular;
      return out;
    }
    u = ub;
    dual[b] = root->exponent;
  }
  out.u = u;
  out.classification = BentClass::BentWeaklyRegular;
  out.regular = u * norm > 0;
  out.dual.emplace(F, std::move(dual));
  return out;
}

std::optional<std::uint32_t> homogeneity_degree(const PAryFunction& f) {
  const FiniteField& F = f.field();
  const std::uint32_t p = F.p();
  for (std::uint32_t k = 1; k < p; ++k) {
    if (std::gcd(k - 1, p - 1) != 1) continue;
    bool ok = true;
    for (std::uint32_t t = 1; t < p && ok; ++t) {
      const FieldElem tt = F.from_int(t);
      const std::uint64_t tk = powmod_small(t, k, p);
      for (std::uint32_t code = 0; code < F.q() && ok; ++code) {
        const FieldElem x{code};
        ok = f(F.mul(tt, x)) == tk * f(x) % p;
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

std::uint32_t dual_degree(std::uint32_t k, std::uint32_t p) {
  const auto inv = inverse_mod(static_cast<std::int64_t>(k) - 1, p);
  if (!inv) throw InvalidArgument("k - 1 is not invertible mod p (k = 1 mod p)");
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(k % p) * *inv % p);
}

std::uint32_t product_level(std::uint32_t s, std::uint32_t t, std::uint32_t l, std::uint32_t p) {
  const std::int64_t order = p - 1;
  const std::int64_t e = (((1 - static_cast<std::int64_t>(l)) % order) + order) % order;
  const auto inv = inverse_mod(e, order);
  if (!inv) throw InvalidArgument("1 - l is not invertible mod p - 1");
  const std::uint32_t base = (powmod_small(s, static_cast<std::uint64_t>(e), p) +
                              powmod_small(t, static_cast<std::uint64_t>(e), p)) % p;
  return powmod_small(base, *inv, p);
}

std::vector<GroupSubset> level_sets(const PAryFunction& f) {
  std::vector<std::vector<std::uint32_t>> members(f.p());
  for (std::uint32_t x = 0; x < f.size(); ++x) members[f.values()[x]].push_back(x);
  std::vector<GroupSubset> out;
  out.reserve(f.p());
  for (auto& m : members) out.emplace_back(f.group(), std::move(m));
  return out;
}

GroupRingElem build_L(const PAryFunction& f, std::uint32_t t) {
  const std::uint32_t p = f.p();
  require_odd(p);
  GroupRingElem out(f.group(), p);
  for (std::uint32_t x = 0; x < f.size(); ++x)
    out.set(x, CycInt::root_power(p, static_cast<std::int64_t>(f.values()[x]) * (t % p)));
  return out;
}

bool LevelProductReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

LevelProductReport verify_level_products(const PAryFunction& f) {
  const std::uint32_t p = f.p();
  const std::uint32_t n = f.n();
  require_odd(p);
  if (n % 2 != 0) throw InvalidArgument("level-set identity checks need even n");
  const auto spectrum = walsh_spectrum(f);
  if (!spectrum.is_weakly_regular()) throw InvalidArgument("function is not weakly regular bent");
  const auto k = homogeneity_degree(f);
  if (!k) throw InvalidArgument("function has no homogeneity degree k with gcd(k-1, p-1) = 1");

  LevelProductReport report;
  report.u = spectrum.u;
  report.k = *k;
  report.l = dual_degree(*k, p);

  const std::int64_t p_star = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
  std::int64_t norm = 1;
  for (std::uint32_t i = 0; i < n / 2; ++i) norm *= p_star;
  const auto pn = static_cast<std::int64_t>(f.size());

  std::vector<GroupRingElem> L;
  for (std::uint32_t t = 0; t < p; ++t) L.push_back(build_L(f, t));
  const GroupPtr& G = f.group();

  for (std::uint32_t t = 1; t < p; ++t) {
    for (std::uint32_t s = 1; s < p; ++s) {
      if ((t + s) % p == 0) continue;
      const std::uint32_t v = product_level(s, t, report.l, p);
      int legendre_n = 1;
      const int leg = legendre(static_cast<std::int64_t>(t) * s * v, p);
      for (std::uint32_t i = 0; i < n; ++i) legendre_n *= leg;
      const GroupRingElem rhs = L[v] * (static_cast<std::int64_t>(report.u) * legendre_n * norm);
      report.checks.push_back({1, t, s, 0, L[t] * L[s] == rhs});
    }
  }
  for (std::uint32_t t = 1; t < p; ++t) {
    const GroupRingElem rhs = GroupRingElem::identity(G, pn, p);
    report.checks.push_back({2, t, 0, 0, L[t] * L[p - t] == rhs});
  }
  const auto levels = level_sets(f);
  for (std::uint32_t a = 0; a < p; ++a) {
    GroupRingElem lhs(G, p);
    for (std::uint32_t t = 1; t < p; ++t)
      lhs += (L[t] * L[0]).scaled(CycInt::root_power(p, -static_cast<std::int64_t>(a) * t));
    const std::int64_t c = static_cast<std::int64_t>(p) * static_cast<std::int64_t>(levels[a].size()) - pn;
    report.checks.push_back({3, 0, 0, a, lhs == GroupRingElem::all_ones(G, p) * c});
  }
  return report;
}

}  // namespace pdslab
