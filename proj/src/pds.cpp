#include "pdslab/pds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "pdslab/error.hpp"

namespace pdslab {

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t x) {
  if (x < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

std::int64_t p_star_power(std::uint32_t p, std::uint32_t half) {
  const std::int64_t p_star = (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
  std::int64_t out = 1;
  for (std::uint32_t i = 0; i < half; ++i) out *= p_star;
  return out;
}

void finish_params(PdsParams& params) { params.latin = classify_latin_type(params); }

}  // namespace

bool PdsParams::counting_identity() const { return k * k == mu * v + (lambda - mu) * k + (k - mu); }

bool PdsParams::srg_feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }

std::string PdsParams::to_string() const {
  std::ostringstream os;
  os << "(" << v << ", " << k << ", " << lambda << ", " << mu << ")";
  return os.str();
}

PdsParams latin_params(int epsilon, std::int64_t N, std::int64_t R) {
  PdsParams out;
  out.v = N * N;
  out.k = (N - epsilon) * R;
  out.lambda = epsilon * N + R * R - 3 * epsilon * R;
  out.mu = R * R - epsilon * R;
  out.latin = LatinType{epsilon, N, R};
  return out;
}

std::optional<LatinType> classify_latin_type(const PdsParams& params) {
  const auto N = exact_sqrt(params.v);
  if (!N || *N < 2) return std::nullopt;
  for (int eps : {1, -1}) {
    const std::int64_t denom = *N - eps;
    if (denom == 0 || params.k % denom != 0) continue;
    const std::int64_t R = params.k / denom;
    const PdsParams cand = latin_params(eps, *N, R);
    if (cand.same_parameters(params)) return cand.latin;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

FiniteField setup_field(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t& j_out) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (gamma < 1) throw InvalidArgument("gamma must be at least 1");
  const auto j = minimal_j(p, e);
  if (!j) throw InvalidArgument("no j with p^j = -1 (mod e) for p = " + std::to_string(p) + ", e = " + std::to_string(e));
  j_out = *j;
  return FiniteField(p, 2 * *j * gamma);
}

}  // namespace

CyclotomicSetup::CyclotomicSetup(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m,
                                 FormKind kind)
    : field_(setup_field(p, e, gamma, j_)),
      e_(e),
      form_(QuadraticForm::standard(field_, m, kind)),
      values_(form_.value_table()),
      epsilon_(form_.form_type().epsilon) {
  if ((field_.q() - 1) % e_ != 0) throw InvariantViolation("e does not divide q - 1");
}

GroupSubset CyclotomicSetup::zero_set() const {
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < values_.size(); ++x)
    if (values_[x].code == 0) members.push_back(x);
  return GroupSubset(group(), std::move(members));
}

GroupSubset CyclotomicSetup::scaled_class_set(FieldElem alpha, std::uint32_t i) const {
  if (i >= e_) throw InvalidArgument("class index " + std::to_string(i) + " outside [0, e)");
  if (alpha.code == 0) throw InvalidArgument("scaling factor must be nonzero");
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < values_.size(); ++x) {
    const FieldElem u = field_.mul(alpha, values_[x]);
    if (u.code != 0 && field_.log(u) % e_ == i) members.push_back(x);
  }
  return GroupSubset(group(), std::move(members));
}

GroupSubset CyclotomicSetup::class_set(std::uint32_t i) const { return scaled_class_set(field_.one(), i); }

PdsParams CyclotomicSetup::predicted() const {
  const auto N = static_cast<std::int64_t>(ipow(q(), m()));
  const auto R = static_cast<std::int64_t>(f() * ipow(q(), m() - 1));
  return latin_params(epsilon_, N, R);
}

Construction construct_cyclotomic_pds(std::uint32_t p, std::uint32_t e, std::uint32_t gamma, std::uint32_t m,
                                      FormKind kind, std::uint32_t i) {
  if (i >= e) throw InvalidArgument("class index " + std::to_string(i) + " outside [0, e)");
  const CyclotomicSetup setup(p, e, gamma, m, kind);
  Construction out{setup.class_set(i), setup.predicted()};
  const auto expected_size = (ipow(setup.q(), m) - setup.epsilon()) * setup.f() * ipow(setup.q(), m - 1);
  if (out.set.size() != expected_size) throw InvariantViolation("class set has the wrong size");
  return out;
}

Construction construct_affine_polar(const FiniteField& field, std::uint32_t m, FormKind kind) {
  if (field.p() == 2) throw InvalidArgument("affine polar construction needs odd q (every element is a square when p = 2)");
  const QuadraticForm form = QuadraticForm::standard(field, m, kind);
  const int eps = form.form_type().epsilon;
  const auto values = form.value_table();
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 0; x < values.size(); ++x)
    if (values[x].code != 0 && field.is_square(values[x])) members.push_back(x);
  const auto q = field.q();
  const auto N = static_cast<std::int64_t>(ipow(q, m));
  const auto R = static_cast<std::int64_t>((q - 1) / 2 * ipow(q, m - 1));
  return {GroupSubset(form.group(), std::move(members)), latin_params(eps, N, R)};
}

Construction construct_rt2(const QuadraticForm& form) {
  if (!form.is_nonsingular()) throw InvalidArgument("RT2 construction needs a nonsingular form");
  const int eps = form.form_type().epsilon;
  const auto values = form.value_table();
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 1; x < values.size(); ++x)
    if (values[x].code == 0) members.push_back(x);
  const std::uint32_t q = form.field().q();
  const std::uint32_t m = form.m();
  const auto N = static_cast<std::int64_t>(ipow(q, m));
  const std::int64_t r = static_cast<std::int64_t>(ipow(q, m - 1)) + eps;
  return {GroupSubset(form.group(), std::move(members)), latin_params(eps, N, r)};
}

// ---------------------------------------------------------------------------

BentPds construct_bent_pds(const PAryFunction& f) {
  const std::uint32_t p = f.p();
  const std::uint32_t n = f.n();
  if (p == 2) throw InvalidArgument("bent PDS construction needs odd p");
  if (n % 2 != 0) throw InvalidArgument("bent PDS construction needs even n");
  const auto spectrum = walsh_spectrum(f);
  if (!spectrum.is_weakly_regular())
    throw InvalidArgument("function is not weakly regular bent (classification: " + to_string(spectrum.classification) + ")");
  const auto k = homogeneity_degree(f);
  if (!k) throw InvalidArgument("function has no homogeneity degree k with gcd(k-1, p-1) = 1");

  const GroupPtr& G = f.group();
  const auto levels = level_sets(f);
  std::vector<std::uint32_t> d0m, dr, dn;
  for (std::uint32_t i = 0; i < p; ++i) {
    auto& dst = i == 0 ? d0m : (legendre(i, p) == 1 ? dr : dn);
    for (auto x : levels[i].members)
      if (x != 0 || i != 0) dst.push_back(x);
  }
  if (f.values()[0] != 0) throw InvalidArgument("homogeneous function must vanish at 0");

  BentPds out{GroupSubset(G, std::move(d0m)), GroupSubset(G, std::move(dr)), GroupSubset(G, std::move(dn)), {}};
  BentPdsCertificate& cert = out.certificate;
  cert.proof_case = (p % 4 == 1) ? 1 : 2;
  cert.u = spectrum.u;
  cert.k = *k;
  const std::int64_t c = cert.u * p_star_power(p, n / 2);
  cert.c = c;

  const auto pn = static_cast<std::int64_t>(f.size());
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t half = (pp - 1) / 2;

  // L_R, L_N over Z[w_p].
  GroupRingElem LR(G, p), LN(G, p);
  for (std::uint32_t t = 1; t < p; ++t) (legendre(t, p) == 1 ? LR : LN) += build_L(f, t);
  const GroupRingElem one_pn = GroupRingElem::identity(G, half * pn, p);
  if (cert.proof_case == 1) {
    const std::int64_t a = (pp - 5) / 4, b = (pp - 1) / 4;
    cert.lr_squared = LR * LR == (LR * a + LN * b) * c + one_pn;
    cert.ln_squared = LN * LN == (LR * b + LN * a) * c + one_pn;
    cert.lr_ln = LR * LN == (LR * b + LN * b) * c;
  } else {
    const std::int64_t a = (pp - 3) / 4, b = (pp + 1) / 4;
    cert.lr_squared = LR * LR == (LR * a + LN * b) * c;
    cert.ln_squared = LN * LN == (LR * b + LN * a) * c;
    cert.lr_ln = LR * LN == (LR * a + LN * a) * c + one_pn;
  }

  const GroupRingElem F = GroupRingElem::all_ones(G);
  const GroupRingElem scalar_part = GroupRingElem::identity(G, (pp * pp - 1) / 4 * pn);
  auto squared_identity = [&](const GroupSubset& s) {
    const GroupRingElem X = GroupRingElem::from_subset(s) * pp - F * half;
    return X * X == scalar_part + X * c;
  };
  cert.dr_identity = squared_identity(out.d_r);
  cert.dn_identity = squared_identity(out.d_n);

  const GroupRingElem D0 = GroupRingElem::from_subset(levels[0]);
  const auto d0_size = static_cast<std::int64_t>(levels[0].size());
  const GroupRingElem lhs = D0 * D0 * (pp * pp);
  const GroupRingElem rhs = F * (-pn + 2 * pp * d0_size - c * (pp - 2)) + D0 * (pp * (pp - 2) * c) +
                            GroupRingElem::identity(G, (pp - 1) * pn);
  cert.d0_identity = lhs == rhs;

  // Nonprincipal characters of X = p D_R - (p-1)/2 F solve x^2 = c x + (p^2-1)/4 p^n;
  // chi(D_R) = x / p.
  const auto root = exact_sqrt(c * c + (pp * pp - 1) * pn);
  if (root) {
    for (std::int64_t sgn : {1, -1}) {
      const std::int64_t x2 = c + sgn * *root;  // 2x
      if (x2 % (2 * pp) == 0) cert.predicted_eigenvalues.push_back(x2 / (2 * pp));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(PdsFailure f) {
  switch (f) {
    case PdsFailure::None: return "none";
    case PdsFailure::ContainsIdentity: return "contains_identity";
    case PdsFailure::Asymmetric: return "asymmetric";
    case PdsFailure::LambdaNotConstant: return "lambda_not_constant";
    case PdsFailure::MuNotConstant: return "mu_not_constant";
    case PdsFailure::NonIntegralCharacter: return "non_integral_character";
    case PdsFailure::TooManyCharacterValues: return "too_many_character_values";
    case PdsFailure::WrongCharacterValue: return "wrong_character_value";
    case PdsFailure::CountingIdentity: return "counting_identity";
  }
  return "unknown";
}

namespace {

// Shared hypotheses of both certifiers: 0 not in D and -D = D.
bool check_set_shape(const GroupSubset& d, PdsFailure& failure, std::optional<std::uint32_t>& witness) {
  if (d.contains(0)) {
    failure = PdsFailure::ContainsIdentity;
    witness = 0;
    return false;
  }
  if (const auto w = d.asymmetry_witness()) {
    failure = PdsFailure::Asymmetric;
    witness = *w;
    return false;
  }
  return true;
}

}  // namespace

BruteForceResult verify_pds_bruteforce(const GroupSubset& d) {
  BruteForceResult res;
  const ElementaryAbelianGroup& G = *d.group;
  const std::uint32_t v = G.order();
  res.params.v = v;
  res.params.k = static_cast<std::int64_t>(d.size());
  if (!check_set_shape(d, res.failure, res.witness)) return res;

  // counts[z] = #{(x, y) in D^2 : x - y = z}
  std::vector<std::int64_t> counts(v, 0);
  const kernels::DigitPlanes planes = G.planes_of(d.members);
  std::vector<std::uint32_t> diff(d.size());
  for (std::uint32_t y : d.members) {
    kernels::translate_indices(planes, G.digits(y), G.place(), diff);
    for (auto z : diff) ++counts[z];
  }

  const auto ind = d.indicator();
  std::optional<std::int64_t> lambda, mu;
  for (std::uint32_t z = 1; z < v; ++z) {
    auto& slot = ind[z] ? lambda : mu;
    if (!slot) {
      slot = counts[z];
    } else if (counts[z] != *slot) {
      res.failure = ind[z] ? PdsFailure::LambdaNotConstant : PdsFailure::MuNotConstant;
      res.witness = z;
      res.witness_count = counts[z];
      res.expected_count = *slot;
      return res;
    }
  }
  res.ok = true;
  res.degenerate = !lambda || !mu || d.size() < 2;
  res.params.lambda = lambda.value_or(0);
  res.params.mu = mu.value_or(0);
  finish_params(res.params);
  return res;
}

std::vector<CycInt> character_values(const GroupSubset& d) {
  const ElementaryAbelianGroup& G = *d.group;
  const std::uint32_t p = G.p();
  const kernels::DigitPlanes planes = G.planes_of(d.members);
  std::vector<std::uint8_t> exps(d.size());
  std::vector<CycInt> out;
  out.reserve(G.order());
  for (std::uint32_t b = 0; b < G.order(); ++b) {
    kernels::dot_mod_p(planes, G.digits(b), {}, exps);
    std::vector<std::int64_t> hist(p, 0);
    for (auto e : exps) ++hist[e];
    out.push_back(CycInt::from_powers(p, hist));
  }
  return out;
}

namespace {

// Checks chi_b(D) for b != 0 against the allowed set; fills failure on mismatch.
void check_values(const std::vector<CycInt>& chi, const std::vector<std::int64_t>& allowed, CharacterResult& res) {
  for (std::uint32_t b = 1; b < chi.size(); ++b) {
    const auto val = chi[b].as_integer();
    if (!val) {
      res.failure = PdsFailure::NonIntegralCharacter;
      res.witness = b;
      return;
    }
    if (std::find(allowed.begin(), allowed.end(), *val) == allowed.end()) {
      res.failure = PdsFailure::WrongCharacterValue;
      res.witness = b;
      return;
    }
  }
  res.ok = true;
}

}  // namespace

CharacterResult verify_pds_characters(const GroupSubset& d, const PdsParams& params) {
  if (!params.counting_identity())
    throw InvalidArgument("parameters " + params.to_string() + " violate k^2 = mu v + (lambda - mu) k + (k - mu)");
  const std::int64_t delta = (params.lambda - params.mu) * (params.lambda - params.mu) + 4 * (params.k - params.mu);
  const auto root = exact_sqrt(delta);
  if (!root) throw InvalidArgument("(lambda - mu)^2 + 4(k - mu) = " + std::to_string(delta) + " is not a perfect square");
  if ((params.lambda - params.mu + *root) % 2 != 0) throw InvalidArgument("eigenvalues are not integers");

  CharacterResult res;
  res.params = params;
  res.eigenvalues = {(params.lambda - params.mu + *root) / 2, (params.lambda - params.mu - *root) / 2};
  if (res.eigenvalues[0] == res.eigenvalues[1]) res.eigenvalues.pop_back();
  if (!check_set_shape(d, res.failure, res.witness)) return res;
  if (static_cast<std::int64_t>(d.size()) != params.k || static_cast<std::int64_t>(d.group->order()) != params.v) {
    res.failure = PdsFailure::WrongCharacterValue;
    res.witness = 0;  // principal character
    return res;
  }
  check_values(character_values(d), res.eigenvalues, res);
  res.degenerate = params.k < 2 || params.k == params.v - 1;
  return res;
}

CharacterResult verify_pds_characters(const GroupSubset& d) {
  CharacterResult res;
  const auto v = static_cast<std::int64_t>(d.group->order());
  const auto k = static_cast<std::int64_t>(d.size());
  res.params.v = v;
  res.params.k = k;
  if (!check_set_shape(d, res.failure, res.witness)) return res;

  const auto chi = character_values(d);
  std::set<std::int64_t> distinct;
  for (std::uint32_t b = 1; b < chi.size(); ++b) {
    const auto val = chi[b].as_integer();
    if (!val) {
      res.failure = PdsFailure::NonIntegralCharacter;
      res.witness = b;
      return res;
    }
    distinct.insert(*val);
    if (distinct.size() > 2) {
      res.failure = PdsFailure::TooManyCharacterValues;
      res.witness = b;
      return res;
    }
  }

  std::int64_t lambda = 0, mu = 0;
  if (k == 0 || distinct.empty()) {
    res.degenerate = true;
  } else if (distinct.size() == 2) {
    const std::int64_t r = *distinct.rbegin(), s = *distinct.begin();
    mu = k + r * s;
    lambda = mu + r + s;
  } else {
    // One observed value r; solve the counting identity for the other root s.
    const std::int64_t r = *distinct.begin();
    const std::int64_t num = k * k - r * k - k * v;
    const std::int64_t den = k + r * (v - 1);
    std::int64_t s = 0;
    if (den != 0 && num % den == 0) {
      s = num / den;
    } else if (den == 0 && num == 0 && r != 0 && k % r == 0) {
      s = -k / r;  // complete graph: mu taken as 0
      res.degenerate = true;
    } else {
      res.failure = PdsFailure::CountingIdentity;
      return res;
    }
    mu = k + r * s;
    lambda = mu + r + s;
  }
  res.params.lambda = lambda;
  res.params.mu = mu;
  if (lambda < 0 || mu < 0 || !res.params.counting_identity()) {
    res.failure = PdsFailure::CountingIdentity;
    return res;
  }
  finish_params(res.params);
  res.eigenvalues.assign(distinct.rbegin(), distinct.rend());
  res.degenerate = res.degenerate || k < 2 || k == v - 1;
  res.ok = true;
  return res;
}

namespace {

std::vector<std::vector<std::uint32_t>> orbits_of(const ElementaryAbelianGroup& G, const std::vector<std::uint8_t>& ind,
                                                  bool inside) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 1; x < G.order(); ++x) {
    const std::uint32_t y = G.neg(x);
    if (y < x || static_cast<bool>(ind[x]) != inside) continue;
    out.push_back(y == x ? std::vector<std::uint32_t>{x} : std::vector<std::uint32_t>{x, y});
  }
  return out;
}

GroupSubset apply_change(const GroupSubset& d, const std::vector<std::uint32_t>* remove,
                         const std::vector<std::uint32_t>* add) {
  std::vector<std::uint32_t> members;
  for (auto x : d.members)
    if (!remove || std::find(remove->begin(), remove->end(), x) == remove->end()) members.push_back(x);
  if (add) members.insert(members.end(), add->begin(), add->end());
  return GroupSubset(d.group, std::move(members));
}

}  // namespace

GroupSubset swap_perturbation(const GroupSubset& d, std::uint64_t seed) {
  const auto ind = d.indicator();
  const auto in = orbits_of(*d.group, ind, true);
  const auto out = orbits_of(*d.group, ind, false);
  if (in.empty() || out.empty()) throw InvalidArgument("swap needs elements both inside and outside the set");
  std::mt19937_64 rng(seed);
  const auto& r = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
  const auto& a = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
  return apply_change(d, &r, &a);
}

GroupSubset random_perturbation(const GroupSubset& d, std::uint64_t seed) {
  const auto ind = d.indicator();
  const auto in = orbits_of(*d.group, ind, true);
  const auto out = orbits_of(*d.group, ind, false);
  std::mt19937_64 rng(seed);
  std::vector<int> kinds;
  if (!in.empty() && !out.empty()) kinds.push_back(0);
  if (!in.empty()) kinds.push_back(1);
  if (!out.empty()) kinds.push_back(2);
  if (kinds.empty()) throw InvalidArgument("group has no nonzero elements");
  const int kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  auto pick = [&](const std::vector<std::vector<std::uint32_t>>& v) -> const std::vector<std::uint32_t>* {
    return &v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  if (kind == 0) {
    const auto* r = pick(in);
    return apply_change(d, r, pick(out));
  }
  if (kind == 1) return apply_change(d, pick(in), nullptr);
  return apply_change(d, nullptr, pick(out));
}

std::string cayley_edge_list(const GroupSubset& d) {
  const ElementaryAbelianGroup& G = *d.group;
  std::ostringstream os;
  for (std::uint32_t x = 0; x < G.order(); ++x)
    for (auto s : d.members) {
      const std::uint32_t y = G.add(x, s);
      if (x < y) os << x << ' ' << y << '\n';
    }
  return os.str();
}

std::string cayley_adjacency_csv(const GroupSubset& d) {
  const ElementaryAbelianGroup& G = *d.group;
  const auto ind = d.indicator();
  std::string out;
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    for (std::uint32_t y = 0; y < G.order(); ++y) {
      if (y) out += ',';
      out += ind[G.sub(x, y)] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace pdslab
