#include "cyclokit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclokit/errors.hpp"

namespace cyclokit {

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  std::size_t df = f.size() - 1;
  u64 lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    u64 c = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j)
      a[shift + j] = (a[shift + j] + p - mul_mod(c, f[j], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result = poly_mod({1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: x^(p^k) = x mod f and gcd(x^(p^(k/r)) - x, f) = 1 for primes r | k.
bool is_irreducible(const Poly& f, u64 p) {
  std::size_t k = f.size() - 1;
  if (k == 1) return true;
  std::vector<Poly> frob(k + 1);
  frob[0] = poly_mod({0, 1}, f, p);
  for (std::size_t i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  for (u64 r : prime_divisors(k)) {
    Poly h = frob[k / r];
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

ExplicitField::ExplicitField(u64 p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw PreconditionError("oracle field characteristic must be prime");
  if (k == 0) throw PreconditionError("oracle field degree must be >= 1");
  u64 order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kOracleMaxOrder) throw SizeBoundError("oracle field exceeds 2^20 elements");
  }
  order_ = order;

  for (u64 code = 0; code < order_; ++code) {
    Poly f(k + 1, 0);
    u64 c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (k > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  auto primes = prime_divisors(order_ - 1 == 0 ? 1 : order_ - 1);
  for (u64 code = 1; code < order_; ++code) {
    Element g = from_code(code);
    bool ok = true;
    for (u64 r : primes) {
      if (pow(g, (order_ - 1) / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (generator_.empty()) throw std::logic_error("no multiplicative generator found");
}

ExplicitField::Element ExplicitField::zero() const { return Element(k_, 0); }

ExplicitField::Element ExplicitField::one() const { return from_int(1); }

ExplicitField::Element ExplicitField::from_int(i64 v) const {
  Element e = zero();
  e[0] = static_cast<std::uint32_t>(ResidueClass::of(v, p_).value);
  return e;
}

ExplicitField::Element ExplicitField::from_code(u64 code) const {
  Element e = zero();
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return e;
}

u64 ExplicitField::code(const Element& x) const {
  u64 c = 0;
  for (unsigned i = k_; i-- > 0;) c = c * p_ + x[i];
  return c;
}

ExplicitField::Element ExplicitField::add(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>((u64{a[i]} + b[i]) % p_);
  return r;
}

ExplicitField::Element ExplicitField::sub(const Element& a, const Element& b) const {
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>((u64{a[i]} + p_ - b[i]) % p_);
  return r;
}

ExplicitField::Element ExplicitField::neg(const Element& a) const { return sub(zero(), a); }

ExplicitField::Element ExplicitField::mul(const Element& a, const Element& b) const {
  std::vector<u64> t(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) t[i + j] = (t[i + j] + u64{a[i]} * b[j]) % p_;
  }
  for (std::size_t i = t.size(); i-- > k_;) {
    u64 c = t[i];
    if (!c) continue;
    for (unsigned j = 0; j < k_; ++j)
      t[i - k_ + j] = (t[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    t[i] = 0;
  }
  Element r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

ExplicitField::Element ExplicitField::pow(const Element& a, u64 e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ExplicitField::Element ExplicitField::inv(const Element& a) const {
  if (is_zero(a)) throw PreconditionError("zero has no inverse");
  return pow(a, order_ - 2);
}

bool ExplicitField::is_zero(const Element& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

bool ExplicitField::is_constant(const Element& a) const {
  for (unsigned i = 1; i < k_; ++i)
    if (a[i]) return false;
  return true;
}

u64 ExplicitField::element_order(const Element& a) const {
  if (is_zero(a)) throw PreconditionError("zero has no multiplicative order");
  u64 order = order_ - 1;
  if (order == 1) return 1;
  for (const auto& pp : factorize(order)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow(a, order / pp.prime) == one())
        order /= pp.prime;
      else
        break;
    }
  }
  return order;
}

std::string ExplicitField::to_string(const Element& a) const {
  std::string s = "[";
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

ExplicitField build_field(u64 p, unsigned k) { return ExplicitField(p, k); }

ExplicitField::Element find_root_of_unity(const ExplicitField& E, u64 n) {
  if (n == 0 || (E.order() - 1) % n != 0)
    throw PreconditionError("n must divide the multiplicative group order");
  return E.pow(E.generator(), (E.order() - 1) / n);
}

std::string FieldValue::to_string() const {
  if (integer) return std::to_string(*integer);
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + "]";
}

QuadraticEmbedding::QuadraticEmbedding(const FieldProfile& base)
    : base_(base),
      q_(base.is_finite() ? base.q() : 0),
      E_(base.is_finite() ? build_field(base.characteristic(), 2 * base.degree())
                          : throw PreconditionError("embedding requires a finite field")) {}

ExplicitField::Element QuadraticEmbedding::root(const RootOfUnity& z) const {
  u64 group = E_.order() - 1;
  if (group % z.order() != 0)
    throw PreconditionError("root order must divide q^2 - 1 for the embedding");
  return E_.pow(E_.generator(), group / z.order() * z.numerator());
}

ExplicitField::Element QuadraticEmbedding::evaluate(const CycloSum& s) const {
  auto acc = E_.zero();
  for (const auto& [z, c] : s.terms()) acc = E_.add(acc, E_.mul(E_.from_int(c), root(z)));
  return acc;
}

bool QuadraticEmbedding::in_base(const ExplicitField::Element& x) const {
  return E_.pow(x, q_) == x;
}

FieldValue QuadraticEmbedding::value(const ExplicitField::Element& x) const {
  FieldValue v;
  v.coeffs = x;
  if (E_.is_constant(x)) v.integer = x[0];
  return v;
}

u64 oracle_max_q() {
  if (const char* env = std::getenv("CYCLOKIT_MAX_Q")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1024;
}

bool embedding_available(const FieldProfile& base) {
  if (!base.is_finite()) return false;
  u64 q = base.q();
  return q <= oracle_max_q() && q * q <= kOracleMaxOrder;
}

std::shared_ptr<const QuadraticEmbedding> quadratic_embedding(const FieldProfile& base) {
  if (!base.is_finite()) throw PreconditionError("embedding requires a finite field");
  if (!embedding_available(base))
    throw SizeBoundError("field " + base.to_string() + " exceeds the oracle size bound");
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, std::shared_ptr<const QuadraticEmbedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(base.characteristic(), base.degree());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto e = std::make_shared<const QuadraticEmbedding>(base);
  cache.emplace(key, e);
  return e;
}

u64 brute_order(const FieldProfile& base, u64 n) {
  if (!base.is_finite()) throw PreconditionError("brute_order requires a finite field");
  if (n == 0 || n % base.characteristic() == 0)
    throw PreconditionError("n must be coprime to the characteristic");
  u64 q = base.q();
  unsigned d = 1;
  u64 qd = q % n;
  while (qd != 1 % n) {
    qd = mul_mod(qd, q, n);
    ++d;
  }
  u64 size = 1;
  for (unsigned i = 0; i < base.degree() * d; ++i) {
    size *= base.characteristic();
    if (size > kOracleMaxOrder) throw SizeBoundError("extension exceeds the oracle size bound");
  }
  ExplicitField E(base.characteristic(), base.degree() * d);
  auto z = find_root_of_unity(E, n);
  auto x = z;
  for (u64 t = 1;; ++t) {
    if (E.pow(x, q) == x) return t;
    x = E.mul(x, z);
  }
}

u64 brute_order(const QuadraticEmbedding& emb, u64 n) {
  const auto& E = emb.field();
  auto z = find_root_of_unity(E, n);
  auto x = z;
  for (u64 t = 1;; ++t) {
    if (emb.in_base(x)) return t;
    x = E.mul(x, z);
  }
}

BruteMinPoly brute_min_poly(const FieldProfile& base, u64 n) {
  auto emb = quadratic_embedding(base);
  const auto& E = emb->field();
  if (n == 0 || (E.order() - 1) % n != 0) throw PreconditionError("n must divide q^2 - 1");
  auto z = find_root_of_unity(E, n);
  auto c = E.pow(z, emb->q());
  if (c == z) throw PreconditionError("zeta_n already lies in the base field");
  BruteMinPoly out;
  out.trace = emb->value(E.add(z, c));
  out.norm = emb->value(E.mul(z, c));
  auto x = z;
  for (u64 k = 1; k < n; ++k) {
    if (x == c) {
      out.conjugate_exponent = k;
      break;
    }
    x = E.mul(x, z);
  }
  return out;
}

std::vector<RootOfUnity> brute_moduli(const FieldProfile& base) {
  auto emb = quadratic_embedding(base);
  const auto& E = emb->field();
  u64 group = E.order() - 1;
  std::vector<RootOfUnity> out;
  auto x = E.one();
  for (u64 i = 0; i < group; ++i) {
    if (!emb->in_base(x)) out.push_back(canonical(group, static_cast<i64>(i)));
    x = E.mul(x, E.generator());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> cyclotomic_polynomial(u64 n) {
  if (n == 0) throw PreconditionError("cyclotomic polynomial requires n >= 1");
  std::vector<i64> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (u64 d = 1; d < n; ++d) {
    if (n % d) continue;
    auto div = cyclotomic_polynomial(d);
    std::vector<i64> quot(num.size() - div.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      i64 c = num[i + div.size() - 1];
      quot[i] = c;
      for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

CycloRing::CycloRing(u64 n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

CycloRing::Element CycloRing::reduce(std::vector<i64> a) const {
  std::size_t d = degree();
  for (std::size_t i = a.size(); i-- > d;) {
    i64 c = a[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * phi_[j];
  }
  a.resize(d, 0);
  return a;
}

CycloRing::Element CycloRing::zeta_power(i64 k) const {
  u64 e = ResidueClass::of(k, n_).value;
  std::vector<i64> a(e + 1, 0);
  a[e] = 1;
  return reduce(std::move(a));
}

CycloRing::Element CycloRing::constant(i64 c) const { return reduce({c}); }

CycloRing::Element CycloRing::add(const Element& a, const Element& b) const {
  Element r(degree(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CycloRing::Element CycloRing::sub(const Element& a, const Element& b) const {
  Element r(degree(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CycloRing::Element CycloRing::mul(const Element& a, const Element& b) const {
  if (degree() == 0) return {};
  std::vector<i64> r(2 * degree() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r));
}

CycloRing::Element CycloRing::evaluate(const CycloSum& s) const {
  Element acc = constant(0);
  for (const auto& [z, c] : s.terms()) {
    Element t = zeta_power(static_cast<i64>(z.exponent_in(n_)));
    for (auto& v : t) v *= c;
    acc = add(acc, t);
  }
  return acc;
}

std::optional<i64> CycloRing::as_integer(const Element& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return std::nullopt;
  return a.empty() ? 0 : a[0];
}

RationalMinPoly rational_min_poly(u64 n) {
  CycloRing R(n);
  if (R.degree() != 2) throw PreconditionError("Q(zeta_n) is not quadratic over Q");
  auto z = R.zeta_power(1);
  for (u64 k = 2; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    auto c = R.zeta_power(static_cast<i64>(k));
    auto s = R.as_integer(R.add(z, c));
    auto m = R.as_integer(R.mul(z, c));
    if (s && m) return {*s, *m, k};
  }
  throw std::logic_error("no rational conjugate found");
}

}  // namespace cyclokit
