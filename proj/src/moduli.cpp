#include "cyclokit/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cyclokit/errors.hpp"
#include "cyclokit/quadcyclo.hpp"

namespace cyclokit {

namespace {

std::vector<u64> candidate_primes(const FieldProfile& field) {
  if (field.is_rational()) {
    // Over Q a quadratic zeta_(p^k) needs phi(p^k) = 2.
    return {2, 3};
  }
  u64 q = field.q();
  return prime_divisors(q * q - 1);
}

u64 field_part(const FieldProfile& field, const std::vector<u64>& excluded) {
  u64 n = field.is_rational() ? 2 : field.q() - 1;
  for (u64 p : excluded)
    while (n % p == 0) n /= p;
  return n;
}

SMaxClass make_class(const FieldProfile& field, std::vector<u64> primes) {
  std::sort(primes.begin(), primes.end());
  SMaxClass c;
  c.primes = primes;
  std::vector<MuSubset> factors;
  u64 rep = 0;
  for (u64 p : primes) {
    u64 l = ell(field, p).value();
    factors.push_back(MuSubset::mu(ipow(p, static_cast<unsigned>(nu(field, p).value()))));
    u64 n_p = ipow(p, static_cast<unsigned>(l + 1));
    if (rep == 0 || n_p < rep) rep = n_p;
  }
  factors.push_back(MuSubset::mu(field_part(field, primes)));
  c.representative_n = rep;
  c.mu_M = MuSubset::product(std::move(factors));
  c.mu_MF = MuSubset::mu(field_part(field, {}));
  return c;
}

void require_odd_char(const FieldProfile& field) {
  if (field.is_finite() && field.characteristic() == 2)
    throw PreconditionError("requires characteristic != 2");
}

}  // namespace

ModuliDescription m2p(const FieldProfile& field, u64 p) {
  u64 v = nu(field, p).value();
  u64 l = ell(field, p).value();
  ModuliDescription d;
  d.kind = "m2p";
  u64 pv = ipow(p, static_cast<unsigned>(v));
  u64 pl = ipow(p, static_cast<unsigned>(l));
  d.presentation = MuSubset::difference(MuSubset::mu(pv), MuSubset::mu(pl));
  d.cardinality = pv - pl;
  d.class_count = v == l ? 0 : 1;
  return d;
}

MuSubset g2(const FieldProfile& field) {
  if (field.is_finite() && field.characteristic() == 2) return MuSubset::empty();
  u64 l = ell(field, 2).value();
  u64 odd = field.is_rational() ? 1 : pfree_quotient(field.q() - 1, 2);
  return MuSubset::product(
      {MuSubset::prim(ipow(2, static_cast<unsigned>(l + 1))), MuSubset::mu(odd)});
}

bool g2_membership(const FieldProfile& field, const RootOfUnity& z) {
  return order_of_zeta(field, z.order()) == 2;
}

RootOfUnity g2_star(const FieldProfile& field, const RootOfUnity& x, const RootOfUnity& y) {
  if (!g2_membership(field, x) || !g2_membership(field, y))
    throw PreconditionError("g2_star requires elements of order two over F");
  RootOfUnity x2 = primary_component(x, 2), y2 = primary_component(y, 2);
  RootOfUnity xo = multiply(x, inverse(x2)), yo = multiply(y, inverse(y2));
  u64 N = x2.order();
  if (y2.order() != N) throw std::logic_error("2-primary parts of G2 elements differ in order");
  RootOfUnity two = canonical(N, static_cast<i64>(mul_mod(x2.numerator(), y2.numerator(), N)));
  return multiply(two, multiply(xo, yo));
}

bool field_equal(const FieldProfile& field, u64 n, u64 m) {
  u64 dn = extension_degree(field, n);
  u64 dm = extension_degree(field, m);
  if (dn > 2 || dm > 2) throw PreconditionError("field_equal requires degrees at most 2");
  if (dn != dm) return false;
  return extension_degree(field, std::lcm(n, m)) == dn;
}

std::vector<u64> s_n(const FieldProfile& field, u64 n) {
  return prime_divisors(order_of_zeta(field, n));
}

SMaxPartition s_max(const FieldProfile& field) {
  std::vector<u64> primes;
  for (u64 p : candidate_primes(field)) {
    if (nu(field, p) > ell(field, p)) primes.push_back(p);
  }
  std::vector<std::size_t> parent(primes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto rep = [&](u64 p) { return ipow(p, static_cast<unsigned>(ell(field, p).value() + 1)); };
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (field_equal(field, rep(primes[i]), rep(primes[j]))) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<u64>> groups;
  for (std::size_t i = 0; i < primes.size(); ++i) groups[find(i)].push_back(primes[i]);
  SMaxPartition out;
  for (auto& [root, ps] : groups) out.classes.push_back(make_class(field, ps));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const SMaxClass& a, const SMaxClass& b) { return a.primes < b.primes; });
  return out;
}

SMaxPartition s_max_closed_form(const FieldProfile& field) {
  SMaxPartition out;
  if (field.is_rational()) {
    out.classes.push_back(make_class(field, {2}));
    out.classes.push_back(make_class(field, {3}));
    return out;
  }
  u64 q = field.q();
  std::vector<u64> M;
  for (u64 p : prime_divisors(q * q - 1))
    if (eps(q * q - 1, p) > (p == field.characteristic() ? 0 : eps(q - 1, p))) M.push_back(p);
  if (!M.empty()) out.classes.push_back(make_class(field, M));
  return out;
}

bool m2_membership(const FieldProfile& field, const RootOfUnity& z) {
  return is_quadratic(field, z.order());
}

bool m2_membership_kappa(const FieldProfile& field, const RootOfUnity& z) {
  return !contains_root(field, z) && kappa_class(field, z).in_field;
}

MuSubset full_moduli(const FieldProfile& field) {
  if (field.is_rational())
    return MuSubset::union_of({MuSubset::prim(3), MuSubset::prim(4), MuSubset::prim(6)});
  u64 q = field.q();
  return MuSubset::difference(MuSubset::mu(q * q - 1), MuSubset::mu(q - 1));
}

QuadClass chi_rad(const FieldProfile& field, u64 n) {
  require_odd_char(field);
  QuadMinPoly mp = min_poly_symbolic(field, n);
  QuadClass c;
  c.kind = QuadClass::Kind::SquareClass;
  if (field.is_rational()) {
    auto full = min_poly(field, n);
    i64 t = *full.trace_concrete->integer;
    i64 m = *full.norm_concrete->integer;
    i64 D = t * t - 4 * m;
    c.value = FieldValue{{}, D};
    c.squarefree = squarefree_kernel(D);
    c.nontrivial = *c.squarefree != 1;
    return c;
  }
  auto emb = quadratic_embedding(field);
  const auto& E = emb->field();
  auto t = emb->evaluate(mp.trace);
  auto D = E.sub(E.mul(t, t), E.mul(E.from_int(4), emb->evaluate(mp.norm)));
  if (E.is_zero(D)) throw std::logic_error("discriminant vanishes");
  c.value = emb->value(D);
  auto euler = E.pow(D, (emb->q() - 1) / 2);
  c.nonresidue = euler == E.from_int(-1);
  if (!*c.nonresidue && euler != E.one()) throw std::logic_error("discriminant not in base field");
  c.nontrivial = *c.nonresidue;
  return c;
}

QuadClass chi_as(const FieldProfile& field, u64 n) {
  if (!field.is_finite() || field.characteristic() != 2)
    throw PreconditionError("chi_as requires characteristic 2");
  QuadMinPoly mp = min_poly_symbolic(field, n);
  auto emb = quadratic_embedding(field);
  const auto& E = emb->field();
  auto t = emb->evaluate(mp.trace);
  if (E.is_zero(t)) throw PreconditionError("trace of zeta_n vanishes");
  auto c = E.mul(emb->evaluate(mp.norm), E.inv(E.mul(t, t)));
  auto tr = E.zero();
  auto x = c;
  for (unsigned i = 0; i < field.degree(); ++i) {
    tr = E.add(tr, x);
    x = E.mul(x, x);
  }
  if (!E.is_constant(tr)) throw std::logic_error("absolute trace is not in F_2");
  QuadClass out;
  out.kind = QuadClass::Kind::ArtinSchreier;
  out.value = emb->value(c);
  out.trace_bit = tr[0];
  out.nontrivial = tr[0] == 1;
  return out;
}

QuadModuliSummary quad_moduli_summary(const FieldProfile& field) {
  QuadModuliSummary s;
  if (field.is_rational()) {
    s.separable_classes = std::nullopt;
    s.separable_index = "squarefree d != 1";
  } else {
    s.separable_classes = 1;
    s.separable_index = field.characteristic() == 2 ? "nonzero absolute trace" : "non-squares";
  }
  s.inseparable_classes = 0;
  return s;
}

bool inseparable_equivalent(const ExplicitField& E, const ExplicitField::Element& a,
                            const ExplicitField::Element& a2) {
  if (E.p() != 2) throw PreconditionError("inseparable classes live in characteristic 2");
  std::set<u64> squares;
  for (u64 code = 0; code < E.order(); ++code) {
    auto b = E.from_code(code);
    squares.insert(E.code(E.mul(b, b)));
  }
  for (u64 code = 1; code < E.order(); ++code) {
    auto c = E.from_code(code);
    auto rest = E.sub(a, E.mul(E.mul(c, c), a2));
    if (squares.count(E.code(E.neg(rest)))) return true;
  }
  return false;
}

}  // namespace cyclokit
