#include "pdslab/gf.hpp"

#include <cstdlib>
#include <string>

#include "pdslab/error.hpp"

namespace pdslab {

namespace {

using Poly = std::vector<std::uint64_t>;  // low-to-high, coefficients mod p
__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// a * b mod (monic) f, all over F_p.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  Poly prod(2 * k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * f[i]) % p;
  }
  prod.resize(k);
  return prod;
}

Poly poly_powmod_x(std::uint64_t e, const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  Poly result(k, 0);
  result[0] = 1;
  Poly base(k, 0);
  if (k == 1)
    base[0] = (p - f[0]) % p;  // x = -f_0 mod (x + f_0)
  else
    base[1] = 1;
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

// x has order exactly q - 1 modulo f. Implies f irreducible: a reducible
// quotient ring has fewer than q - 1 units.
bool root_is_primitive(const Poly& f, std::uint64_t p, std::uint64_t q) {
  if (f[0] == 0) return false;
  const std::uint64_t order = q - 1;
  if (!is_one(poly_powmod_x(order, f, p))) return false;
  for (std::uint64_t l : prime_factors(order))
    if (is_one(poly_powmod_x(order / l, f, p))) return false;
  return true;
}

}  // namespace

std::uint64_t max_group_size() {
  if (const char* env = std::getenv("PDSLAB_MAX_GROUP")) {
    try {
      const auto v = std::stoull(env);
      if (v >= 2) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("PDSLAB_MAX_GROUP is not a valid size: ") + env);
  }
  return kDefaultMaxFieldSize;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("field degree must be at least 1");
  const std::uint64_t cap = max_group_size();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > cap)
      throw InvalidArgument("field size " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds the size cap " + std::to_string(cap));
  }
  p_ = p;
  k_ = k;
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    std::uint64_t g = 1;
    if (p > 2) {
      const auto factors = prime_factors(p - 1);
      for (g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto l : factors)
          if (powmod(g, (p - 1) / l, p) == 1) { primitive = false; break; }
        if (primitive) break;
      }
    }
    modulus_ = {static_cast<std::uint32_t>((p - g) % p), 1};
  } else {
    // Candidates c_0 + c_1 x + ... + x^k ordered by sum c_i p^i.
    const std::uint64_t count = q;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
      Poly f(k + 1, 0);
      std::uint64_t t = tail;
      for (std::uint32_t i = 0; i < k; ++i, t /= p) f[i] = t % p;
      f[k] = 1;
      if (root_is_primitive(f, p, q)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
    if (modulus_.empty()) throw InvariantViolation("no primitive polynomial found");
  }
  build_tables();
}

FiniteField FiniteField::from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) throw InvalidArgument("modulus must have degree at least 1");
  FiniteField probe(p, static_cast<std::uint32_t>(modulus.size() - 1));
  if (probe.modulus_ == modulus) return probe;
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  Poly f(modulus.begin(), modulus.end());
  for (auto c : f)
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  if (!root_is_primitive(f, p, probe.q_)) throw InvalidArgument("modulus is not a primitive polynomial");
  FiniteField out;
  out.p_ = p;
  out.k_ = probe.k_;
  out.q_ = probe.q_;
  out.modulus_ = std::move(modulus);
  out.build_tables();
  return out;
}

void FiniteField::build_tables() {
  pow_p_.assign(k_, 1);
  for (std::uint32_t i = 1; i < k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  log_.assign(q_, -1);
  antilog_.assign(q_ - 1, FieldElem{});

  // Walk g^0, g^1, ... where g is the root of the modulus.
  std::vector<std::uint32_t> cur(k_, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e + 1 < q_; ++e) {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < k_; ++i) code += cur[i] * pow_p_[i];
    if (log_[code] != -1) throw InvariantViolation("modulus root is not primitive");
    log_[code] = static_cast<std::int32_t>(e);
    antilog_[e] = FieldElem{code};
    if (k_ == 1) {
      const std::uint32_t g = (p_ - modulus_[0]) % p_;
      cur[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cur[0]) * g % p_);
    } else {
      const std::uint32_t top = cur[k_ - 1];
      for (std::uint32_t i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (std::uint32_t i = 0; i < k_; ++i)
        cur[i] = static_cast<std::uint32_t>(
            (cur[i] + static_cast<std::uint64_t>(p_ - top) * modulus_[i]) % p_);
    }
  }

  trace_.assign(q_, 0);
  for (std::uint32_t code = 0; code < q_; ++code) {
    const FieldElem a{code};
    FieldElem acc = zero();
    FieldElem term = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      acc = add(acc, term);
      term = pow(term, p_);
    }
    if (acc.code >= p_) throw InvariantViolation("trace left the prime subfield");
    trace_[code] = acc.code;
  }
}

void FiniteField::check(FieldElem a) const {
  if (a.code >= q_)
    throw InvalidArgument("element code " + std::to_string(a.code) + " does not belong to " + describe());
}

FieldElem FiniteField::from_int(std::int64_t a) const {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint32_t>(((a % p) + p) % p)};
}

FieldElem FiniteField::element(std::uint32_t code) const {
  check(FieldElem{code});
  return {code};
}

std::vector<std::uint32_t> FiniteField::coeffs(FieldElem a) const {
  check(a);
  std::vector<std::uint32_t> out(k_);
  for (std::uint32_t i = 0; i < k_; ++i, a.code /= p_) out[i] = a.code % p_;
  return out;
}

FieldElem FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) throw InvalidArgument("coefficient vector has wrong length");
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    code += coeffs[i] * pow_p_[i];
  }
  return {code};
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (p_ == 2) return {a.code ^ b.code};
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t s = a.code % p_ + b.code % p_;
    code += (s >= p_ ? s - p_ : s) * pow_p_[i];
    a.code /= p_;
    b.code /= p_;
  }
  return {code};
}

FieldElem FiniteField::neg(FieldElem a) const {
  check(a);
  if (p_ == 2) return a;
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < k_; ++i, a.code /= p_) {
    const std::uint32_t d = a.code % p_;
    code += (d ? p_ - d : 0) * pow_p_[i];
  }
  return {code};
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t e = static_cast<std::uint64_t>(log_[a.code]) + static_cast<std::uint64_t>(log_[b.code]);
  return antilog_[e % (q_ - 1)];
}

FieldElem FiniteField::inv(FieldElem a) const {
  check(a);
  if (a.code == 0) throw InvalidArgument("inversion of zero in " + describe());
  const std::uint32_t order = q_ - 1;
  return antilog_[(order - static_cast<std::uint32_t>(log_[a.code])) % order];
}

FieldElem FiniteField::exp_g(std::int64_t e) const {
  const auto order = static_cast<std::int64_t>(q_ - 1);
  return antilog_[static_cast<std::size_t>(((e % order) + order) % order)];
}

FieldElem FiniteField::pow(FieldElem a, std::int64_t e) const {
  check(a);
  if (a.code == 0) {
    if (e == 0) return one();
    if (e < 0) throw InvalidArgument("negative power of zero");
    return zero();
  }
  const auto order = static_cast<std::int64_t>(q_ - 1);
  const std::int64_t er = ((e % order) + order) % order;
  const auto l = static_cast<std::int64_t>(log_[a.code]);
  return antilog_[static_cast<std::size_t>(
      static_cast<u128>(l) * static_cast<u128>(er) % static_cast<u128>(order))];
}

std::uint32_t FiniteField::log(FieldElem a) const {
  check(a);
  if (a.code == 0) throw InvalidArgument("discrete log of zero");
  return static_cast<std::uint32_t>(log_[a.code]);
}

bool FiniteField::is_square(FieldElem a) const {
  check(a);
  if (a.code == 0 || p_ == 2) return true;
  return log_[a.code] % 2 == 0;
}

std::string FiniteField::describe() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

}  // namespace pdslab
