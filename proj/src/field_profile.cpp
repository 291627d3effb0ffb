#include "cyclokit/field_profile.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "cyclokit/errors.hpp"

namespace cyclokit {

u64 ExtendedNat::value() const {
  if (!value_) throw PreconditionError("extended natural is infinite");
  return *value_;
}

std::string ExtendedNat::to_string() const {
  return value_ ? std::to_string(*value_) : "inf";
}

std::strong_ordering ExtendedNat::operator<=>(const ExtendedNat& o) const {
  if (!value_ && !o.value_) return std::strong_ordering::equal;
  if (!value_) return std::strong_ordering::greater;
  if (!o.value_) return std::strong_ordering::less;
  return *value_ <=> *o.value_;
}

FieldProfile FieldProfile::rationals() { return FieldProfile(); }

FieldProfile FieldProfile::finite_field(u64 p, unsigned k) {
  if (!is_prime(p)) throw PreconditionError("field characteristic must be prime");
  if (k == 0) throw PreconditionError("field degree must be >= 1");
  FieldProfile f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = ipow(p, k);
  if (f.q_ > (u64{1} << 31)) throw SizeBoundError("field order exceeds 2^31");
  return f;
}

u64 FieldProfile::q() const {
  if (!is_finite()) throw PreconditionError("Q has no finite order");
  return q_;
}

std::string FieldProfile::to_string() const {
  if (is_rational()) return "Q";
  std::string s = "q:" + std::to_string(p_);
  if (k_ > 1) s += "^" + std::to_string(k_);
  return s;
}

FieldProfile parse_field_spec(std::string_view spec) {
  if (spec == "Q" || spec == "QQ") return FieldProfile::rationals();
  if (spec.rfind("q:", 0) != 0) throw PreconditionError("field must be Q or q:<p>[^<k>]");
  std::string_view body = spec.substr(2);
  auto caret = body.find('^');
  auto parse_u = [&](std::string_view t) {
    u64 v = 0;
    auto r = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || r.ec != std::errc{} || r.ptr != t.data() + t.size())
      throw PreconditionError("malformed field spec: " + std::string(spec));
    return v;
  };
  if (caret != std::string_view::npos) {
    u64 p = parse_u(body.substr(0, caret));
    u64 k = parse_u(body.substr(caret + 1));
    if (k == 0 || k > 64) throw PreconditionError("field degree out of range");
    return FieldProfile::finite_field(p, static_cast<unsigned>(k));
  }
  u64 q = parse_u(body);
  u64 p = 0;
  unsigned k = 0;
  if (!prime_power_decompose(q, p, k)) throw PreconditionError("q must be a prime power");
  return FieldProfile::finite_field(p, k);
}

void require_coprime_to_char(const FieldProfile& field, u64 n) {
  if (n == 0) throw PreconditionError("n must be >= 1");
  if (field.is_finite() && n % field.characteristic() == 0)
    throw PreconditionError("n must be coprime to the characteristic");
}

u64 n_F(const FieldProfile& field, u64 n) {
  require_coprime_to_char(field, n);
  if (field.is_rational()) return n % 2 == 0 ? 2 : 1;
  return std::gcd(n, field.q() - 1);
}

u64 order_of_zeta(const FieldProfile& field, u64 n) { return n / n_F(field, n); }

ExtendedNat ell(const FieldProfile& field, u64 p) {
  if (!is_prime(p)) throw PreconditionError("ell requires p prime");
  if (field.is_rational()) return ExtendedNat::finite(p == 2 ? 1 : 0);
  if (p == field.characteristic()) throw PreconditionError("ell requires p != characteristic");
  return ExtendedNat::finite(eps(field.q() - 1, p));
}

bool contains_root(const FieldProfile& field, const RootOfUnity& z) {
  return order_of_zeta(field, z.order()) == 1;
}

u64 extension_degree(const FieldProfile& field, u64 n) {
  require_coprime_to_char(field, n);
  if (field.is_rational()) return euler_phi(n);
  return mult_order(field.q() % n, n);
}

ResidueClass frobenius_exponent(const FieldProfile& field, u64 n) {
  if (!field.is_finite()) throw PreconditionError("frobenius_exponent requires a finite field");
  require_coprime_to_char(field, n);
  return ResidueClass::of(static_cast<i64>(field.q()), n);
}

std::vector<u64> galois_exponents(const FieldProfile& field, u64 N) {
  require_coprime_to_char(field, N);
  std::vector<u64> out;
  if (field.is_rational()) {
    for (u64 j = 0; j < N; ++j)
      if (std::gcd(j, N) == 1) out.push_back(N == 1 ? 0 : j);
    return out;
  }
  u64 g = field.q() % N;
  u64 x = 1 % N;
  do {
    out.push_back(x);
    x = mul_mod(x, g, N);
  } while (x != 1 % N);
  std::sort(out.begin(), out.end());
  return out;
}

bool power_is_minus_one(const FieldProfile& field, u64 t, u64 m) {
  if (t == 0) throw PreconditionError("order must be >= 1");
  if (field.is_finite() && field.characteristic() == 2) return m % t == 0;
  return t % 2 == 0 && m % t == t / 2;
}

bool pair_fixed_by(const FieldProfile& field, u64 t, Sign s, u64 j) {
  if (t == 0) throw PreconditionError("order must be >= 1");
  if (j % t == 1 % t) return true;
  if (s == Sign::Plus) return (j + 1) % t == 0;
  return power_is_minus_one(field, t, j + 1);
}

bool cos_sum_in_field(const FieldProfile& field, u64 n, Sign s) {
  require_coprime_to_char(field, n);
  if (s == Sign::Minus && n % 2 == 1 && n > 2)
    throw PreconditionError("difference form requires n even or n <= 2");
  for (u64 j : galois_exponents(field, n))
    if (!pair_fixed_by(field, n, s, j)) return false;
  return true;
}

}  // namespace cyclokit
