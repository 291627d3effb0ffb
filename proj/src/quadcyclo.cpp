#include "cyclokit/quadcyclo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cyclokit/errors.hpp"

namespace cyclokit {

namespace {

struct Shape {
  u64 n = 1;
  unsigned e = 0;  // eps(n, 2)
  u64 two = 1;     // 2^e
  u64 m = 1;       // odd part of n
  u64 m_F = 1;     // part of m whose roots lie in F
  u64 o_m = 1;     // m / m_F
  u64 o = 1;       // o_F(zeta_n)
  u64 o_two = 1;   // o_F(zeta_(2^e))
};

Shape shape_of(const FieldProfile& field, u64 n) {
  Shape s;
  s.n = n;
  s.e = eps(n, 2);
  s.two = ipow(2, s.e);
  s.m = n / s.two;
  s.m_F = n_F(field, s.m);
  s.o_m = s.m / s.m_F;
  s.o = order_of_zeta(field, n);
  s.o_two = order_of_zeta(field, s.two);
  return s;
}

QuadCase classify(const FieldProfile& field, const Shape& s) {
  if (s.o == 2) return QuadCase::Radical;
  if (s.o % 2 == 1) return QuadCase::Odd;
  if (s.o_two == 2) return QuadCase::TwoLow;
  if (s.e > 2 && s.o_two == s.two / 2) {
    if (cos_sum_in_field(field, s.two, Sign::Plus)) return QuadCase::TwoHighPlus;
    if (cos_sum_in_field(field, s.two, Sign::Minus)) return QuadCase::TwoHighMinus;
  }
  throw std::logic_error("quadratic zeta_" + std::to_string(s.n) + " fits no known shape");
}

std::string pair_display(const RootOfUnity& prefactor, const RootOfUnity& u, bool plus) {
  std::string body = u.to_string() + (plus ? " + " : " - ") + inverse(u).to_string();
  if (u.is_identity()) body = plus ? "2" : "0";
  if (prefactor.is_identity()) return body;
  return prefactor.to_string() + "*(" + body + ")";
}

std::string signed_root_display(const RootOfUnity& r, bool negative) {
  std::string body = r.is_identity() ? "1" : r.to_string();
  return negative ? "-" + body : body;
}

CycloSum pair_sum(const RootOfUnity& prefactor, const RootOfUnity& u, bool plus) {
  CycloSum inner = CycloSum::root(u) + CycloSum::root(inverse(u), plus ? 1 : -1);
  return CycloSum::root(prefactor) * inner;
}

// Value of an element of Z[mu_inf] that is known to be a rational integer.
std::optional<i64> integer_value(const CycloSum& s) {
  std::complex<long double> acc = 0;
  for (const auto& [z, c] : s.terms()) {
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(z.numerator()) /
                        static_cast<long double>(z.denominator());
    acc += static_cast<long double>(c) * std::polar<long double>(1.0L, angle);
  }
  long double r = std::round(acc.real());
  if (std::fabs(acc.imag()) > 1e-9L || std::fabs(acc.real() - r) > 1e-9L) return std::nullopt;
  return static_cast<i64>(r);
}

std::optional<FieldValue> concrete_value(const FieldProfile& field, const CycloSum& s) {
  if (field.is_rational()) {
    auto v = integer_value(s);
    if (!v) return std::nullopt;
    return FieldValue{{}, v};
  }
  if (!embedding_available(field)) return std::nullopt;
  auto emb = quadratic_embedding(field);
  auto x = emb->evaluate(s);
  if (!emb->in_base(x))
    throw std::logic_error("coefficient " + s.to_string() + " does not lie in the base field");
  return emb->value(x);
}

void require_quadratic(const FieldProfile& field, u64 n) {
  if (!is_quadratic(field, n))
    throw PreconditionError("zeta_" + std::to_string(n) + " is not quadratic over " +
                            field.to_string());
}

}  // namespace

std::string to_string(QuadCase c) {
  switch (c) {
    case QuadCase::Odd:
      return "odd";
    case QuadCase::TwoHighPlus:
      return "two_high_plus";
    case QuadCase::TwoLow:
      return "two_low";
    case QuadCase::TwoHighMinus:
      return "two_high_minus";
    case QuadCase::Radical:
      return "radical";
  }
  return "?";
}

std::string to_string(KappaBranch b) {
  switch (b) {
    case KappaBranch::Plus:
      return "plus";
    case KappaBranch::Minus:
      return "minus";
    case KappaBranch::TwoTimes:
      return "two_times";
  }
  return "?";
}

std::string QuadMinPoly::polynomial() const {
  std::string t = trace_concrete ? trace_concrete->to_string() : trace_display;
  std::string m = norm_concrete ? norm_concrete->to_string() : norm_display;
  return "x^2 - (" + t + ")*x + (" + m + ")";
}

bool is_quadratic(const FieldProfile& field, u64 n) { return extension_degree(field, n) == 2; }

u64 t_nF(const FieldProfile& field, u64 n) {
  require_coprime_to_char(field, n);
  u64 t = 1;
  for (const auto& pp : factorize(n)) {
    u64 pe = ipow(pp.prime, pp.exponent);
    u64 o = order_of_zeta(field, pe);
    if (pp.prime != 2) {
      if (o != 1) t *= pe;
    } else if (o > 2) {
      t *= pe;
    } else if (o == 2) {
      t *= 2;
    }
  }
  return t;
}

QuadMinPoly min_poly_symbolic(const FieldProfile& field, u64 n) {
  require_quadratic(field, n);
  Shape s = shape_of(field, n);
  QuadMinPoly out;
  out.n = n;
  out.case_tag = classify(field, s);
  const RootOfUnity z = zeta(n);
  const i64 two = static_cast<i64>(s.two);

  if (out.case_tag == QuadCase::Radical) {
    out.yogh = ResidueClass::of(1 + static_cast<i64>(n / 2), n);
    out.trace = CycloSum{};
    out.norm = -CycloSum::root(power(z, 2));
    out.trace_display = "0";
    out.norm_display = signed_root_display(power(z, 2), true);
  } else if (out.case_tag == QuadCase::Odd) {
    u64 nF = n / s.o;
    RootOfUnity B = primary_component(z, nF);
    RootOfUnity C = primary_component(z, s.o);
    ResidueClass parts[] = {{1 % nF, nF}, ResidueClass::of(-1, s.o)};
    out.yogh = crt(parts);
    out.trace = pair_sum(B, C, true);
    out.norm = CycloSum::root(power(B, 2));
    out.trace_display = pair_display(B, C, true);
    out.norm_display = signed_root_display(power(B, 2), false);
  } else {
    RootOfUnity A = primary_component(z, s.two);
    RootOfUnity B = primary_component(z, s.m_F);
    RootOfUnity C = primary_component(z, s.o_m);
    i64 a_exp = 0;
    switch (out.case_tag) {
      case QuadCase::TwoLow:
        a_exp = 1 + two / 2;
        break;
      case QuadCase::TwoHighPlus:
        a_exp = -1;
        break;
      case QuadCase::TwoHighMinus:
        a_exp = two / 2 - 1;
        break;
      default:
        break;
    }
    ResidueClass parts[] = {ResidueClass::of(a_exp, s.two), {1 % s.m_F, s.m_F},
                            ResidueClass::of(-1, s.o_m)};
    out.yogh = crt(parts);
    if (out.case_tag == QuadCase::TwoLow) {
      RootOfUnity AB = multiply(A, B);
      out.trace = pair_sum(AB, C, false);
      out.norm = -CycloSum::root(power(AB, 2));
      out.trace_display = pair_display(AB, C, false);
      out.norm_display = signed_root_display(power(AB, 2), true);
    } else {
      bool plus = out.case_tag == QuadCase::TwoHighPlus;
      RootOfUnity D = multiply(A, C);
      out.trace = pair_sum(B, D, plus);
      out.norm = CycloSum::root(power(B, 2), plus ? 1 : -1);
      out.trace_display = pair_display(B, D, plus);
      out.norm_display = signed_root_display(power(B, 2), !plus);
    }
  }

  out.conjugate = power(z, static_cast<i64>(out.yogh.value));
  if (std::gcd(out.yogh.value, n) != 1)
    throw std::logic_error("conjugate exponent is not a unit mod " + std::to_string(n));
  if (!contains_root(field, multiply(z, out.conjugate)))
    throw std::logic_error("zeta_n^(yogh+1) is not in the base field");
  // The factored forms must expand to zeta + sigma(zeta) and zeta * sigma(zeta).
  if (out.trace != CycloSum::root(z) + CycloSum::root(out.conjugate) ||
      out.norm != CycloSum::root(multiply(z, out.conjugate)))
    throw std::logic_error("factored coefficients disagree with the conjugate pair");
  return out;
}

QuadMinPoly min_poly(const FieldProfile& field, u64 n) {
  QuadMinPoly out = min_poly_symbolic(field, n);
  out.trace_concrete = concrete_value(field, out.trace);
  out.norm_concrete = concrete_value(field, out.norm);
  return out;
}

ResidueClass yogh(const FieldProfile& field, u64 n) { return min_poly_symbolic(field, n).yogh; }

std::string RadicalGenerator::polynomial() const {
  std::string v = square_value ? square_value->to_string() : square.to_string();
  return "x^2 - (" + v + ")";
}

std::string ArtinSchreierGenerator::polynomial() const {
  std::string v = constant_value ? constant_value->to_string()
                                 : "(" + constant_numerator.to_string() + ")/(" +
                                       constant_denominator.to_string() + ")";
  return "x^2 + x + (" + v + ")";
}

RadicalGenerator radical_generator(const FieldProfile& field, u64 n) {
  if (field.is_finite() && field.characteristic() == 2)
    throw PreconditionError("radical generator requires characteristic != 2");
  QuadMinPoly mp = min_poly_symbolic(field, n);
  RadicalGenerator g;
  g.element = CycloSum::root(zeta(n)) - CycloSum::root(mp.conjugate);
  g.square = g.element * g.element;
  g.square_value = concrete_value(field, g.square);
  return g;
}

ArtinSchreierGenerator artin_schreier_generator(const FieldProfile& field, u64 n) {
  if (!field.is_finite() || field.characteristic() != 2)
    throw PreconditionError("Artin-Schreier generator requires characteristic 2");
  QuadMinPoly mp = min_poly(field, n);
  if (mp.trace_concrete && mp.trace_concrete->integer == 0)
    throw PreconditionError("trace of zeta_n vanishes");
  ArtinSchreierGenerator g;
  g.numerator = CycloSum::root(zeta(n));
  g.denominator = mp.trace;
  g.constant_numerator = mp.norm;
  g.constant_denominator = mp.trace * mp.trace;
  if (embedding_available(field)) {
    auto emb = quadratic_embedding(field);
    const auto& E = emb->field();
    auto tr = emb->evaluate(mp.trace);
    auto c = E.mul(emb->evaluate(mp.norm), E.inv(E.mul(tr, tr)));
    g.constant_value = emb->value(c);
  }
  return g;
}

bool is_order_two(const FieldProfile& field, u64 n) { return order_of_zeta(field, n) == 2; }

std::optional<unsigned> has_property_C2(const FieldProfile& field) {
  if (field.is_finite() && field.characteristic() == 2) return std::nullopt;
  unsigned bound = field.is_rational() ? 3 : eps(field.q() * field.q() - 1, 2) + 1;
  std::optional<unsigned> found;
  for (unsigned e = 1; e <= bound; ++e) {
    u64 pe = ipow(2, e);
    if (contains_root(field, zeta(pe))) continue;
    if (t_nF(field, pe) == 2) continue;
    if (!cos_sum_in_field(field, pe, Sign::Minus)) continue;
    if (found) throw std::logic_error("property C2 witnessed by two exponents");
    found = e;
  }
  return found;
}

ExtendedNat nu_plus(const FieldProfile& field, u64 p) {
  if (!is_prime(p)) throw PreconditionError("nu requires p prime");
  if (field.is_finite() && p == field.characteristic())
    throw PreconditionError("nu requires p != characteristic");
  // Over Q only zeta_3, zeta_4 and zeta_6 are quadratic.
  if (field.is_rational()) return ExtendedNat::finite(p == 2 ? 2 : p == 3 ? 1 : 0);
  u64 q = field.q();
  unsigned bound = eps(q * q - 1, p) + 1;
  u64 best = 0;
  for (unsigned k = 1; k <= bound; ++k) {
    u64 t = t_nF(field, ipow(p, k));
    if (cos_sum_in_field(field, t, Sign::Plus)) best = k;
  }
  return ExtendedNat::finite(best);
}

ExtendedNat nu(const FieldProfile& field, u64 p) {
  ExtendedNat base = nu_plus(field, p);
  if (p == 2 && has_property_C2(field)) return ExtendedNat::finite(base.value() + 1);
  return base;
}

KappaClass kappa_class(const FieldProfile& field, const RootOfUnity& z) {
  const u64 n = z.order();
  require_coprime_to_char(field, n);
  KappaClass k;
  k.t = t_nF(field, n);
  unsigned e = eps(n, 2);
  k.two_power = ipow(2, e);
  // Components are taken as powers of z itself so the choice of primitive
  // root is respected.
  RootOfUnity zt = power(z, static_cast<i64>(n / k.t));
  bool char2 = field.is_finite() && field.characteristic() == 2;
  u64 o_two = order_of_zeta(field, k.two_power);
  auto c2 = has_property_C2(field);

  if (char2 || o_two != 2) {
    bool minus = !char2 && c2 && *c2 == e;
    k.branch = minus ? KappaBranch::Minus : KappaBranch::Plus;
    k.representative = CycloSum::root(zt) + CycloSum::root(inverse(zt), minus ? -1 : 1);
    k.in_field = cos_sum_in_field(field, k.t, minus ? Sign::Minus : Sign::Plus);
    return k;
  }

  k.branch = KappaBranch::TwoTimes;
  RootOfUnity w = power(z, static_cast<i64>(n / k.two_power));
  k.representative =
      CycloSum::root(w) * (CycloSum::root(zt) - CycloSum::root(inverse(zt)));
  u64 N = std::lcm(k.two_power, k.t);
  bool fixed = true;
  for (u64 j : galois_exponents(field, N)) {
    bool same = j % k.two_power == 1;
    bool flipped = j % k.two_power == (1 + k.two_power / 2) % k.two_power;
    if (k.t <= 2) continue;
    if (same) {
      fixed = j % k.t == 1 || power_is_minus_one(field, k.t, j + 1);
    } else if (flipped) {
      fixed = power_is_minus_one(field, k.t, j + k.t - 1) || (j + 1) % k.t == 0;
    } else {
      throw std::logic_error("automorphism moves a root of order two over F");
    }
    if (!fixed) break;
  }
  k.in_field = fixed;
  return k;
}

}  // namespace cyclokit
