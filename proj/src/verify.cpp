#include "cyclokit/verify.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclokit/automorphisms.hpp"
#include "cyclokit/errors.hpp"
#include "cyclokit/moduli.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/quadcyclo.hpp"

namespace cyclokit {

namespace {

// All checks for one divisor n of q^2 - 1.
std::vector<std::string> check_divisor(const FieldProfile& field, const QuadraticEmbedding& emb,
                                       u64 n, bool& quadratic) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) {
    bad.push_back(field.to_string() + " n=" + std::to_string(n) + ": " + what);
  };
  const auto& E = emb.field();
  const u64 q = emb.q();
  const bool char2 = field.characteristic() == 2;
  auto z = find_root_of_unity(E, n);
  auto zq = E.pow(z, q);
  bool oracle_in_base = zq == z;

  u64 o = order_of_zeta(field, n);
  u64 ob = brute_order(emb, n);
  if (o != ob) fail("order " + std::to_string(o) + " vs oracle " + std::to_string(ob));
  if (contains_root(field, zeta(n)) != oracle_in_base) fail("base-field membership differs");

  quadratic = is_quadratic(field, n);
  if (quadratic == oracle_in_base) fail("quadratic flag differs from the oracle");

  if (g2_membership(field, zeta(n)) != (ob == 2)) fail("G2 membership differs");

  for (Sign s : {Sign::Plus, Sign::Minus}) {
    if (s == Sign::Minus && (char2 || (n % 2 == 1 && n > 2))) continue;
    auto x = E.add(z, s == Sign::Plus ? E.inv(z) : E.neg(E.inv(z)));
    if (cos_sum_in_field(field, n, s) != emb.in_base(x))
      fail(std::string("cos_sum ") + (s == Sign::Plus ? "plus" : "minus") + " differs");
  }

  // kappa on a few primitive roots, not only zeta_n itself.
  unsigned sampled = 0;
  for (u64 j = 1; j < n + 1 && sampled < 6; ++j) {
    if (std::gcd(j, n) != 1) continue;
    ++sampled;
    RootOfUnity r = canonical(n, static_cast<i64>(j));
    KappaClass k = kappa_class(field, r);
    auto kv = emb.evaluate(k.representative);
    if (k.in_field != emb.in_base(kv)) fail("kappa in_field differs at j=" + std::to_string(j));
    if (m2_membership_kappa(field, r) != !oracle_in_base)
      fail("kappa moduli membership differs at j=" + std::to_string(j));
    if (m2_membership(field, r) != !oracle_in_base)
      fail("degree moduli membership differs at j=" + std::to_string(j));
  }

  if (!quadratic) return bad;

  QuadMinPoly mp = min_poly(field, n);
  BruteMinPoly bp = brute_min_poly(field, n);
  if (!mp.trace_concrete || !mp.norm_concrete) {
    fail("missing concrete coefficients");
  } else {
    if (*mp.trace_concrete != bp.trace)
      fail("trace " + mp.trace_concrete->to_string() + " vs oracle " + bp.trace.to_string());
    if (*mp.norm_concrete != bp.norm)
      fail("norm " + mp.norm_concrete->to_string() + " vs oracle " + bp.norm.to_string());
  }
  if (mp.yogh.value != bp.conjugate_exponent)
    fail("yogh " + std::to_string(mp.yogh.value) + " vs oracle " +
         std::to_string(bp.conjugate_exponent));
  if (mp.yogh != frobenius_exponent(field, n)) fail("yogh differs from q mod n");
  FixingSubgroup fix = fixing_subgroup(n, n_F(field, n));
  for (const auto& j : galois_image(field, n)) {
    if (std::gcd(j.value, n) != 1) fail("galois image element not a unit");
    if (!fix.contains(j.value)) fail("galois image element outside U_n(n_F)");
    auto zj = E.pow(z, j.value);
    if (zj != z && zj != zq) fail("galois image element is not an automorphism");
  }

  if (!char2) {
    QuadClass c = chi_rad(field, n);
    if (!c.nontrivial) fail("radical class is trivial");
    RadicalGenerator g = radical_generator(field, n);
    if (!g.square_value || *g.square_value != c.value) fail("radical square differs from discriminant");
  } else {
    QuadClass c = chi_as(field, n);
    if (!c.nontrivial) fail("Artin-Schreier trace bit is 0");
    ArtinSchreierGenerator g = artin_schreier_generator(field, n);
    auto x = E.mul(z, E.inv(E.add(z, zq)));
    auto lhs = E.add(E.mul(x, x), x);
    if (!g.constant_value || emb.value(E.neg(lhs)) != *g.constant_value)
      fail("Artin-Schreier generator does not satisfy its polynomial");
  }
  return bad;
}

std::vector<std::string> check_guarded(const FieldProfile& field, const QuadraticEmbedding& emb,
                                       u64 n, bool& quadratic) {
  try {
    return check_divisor(field, emb, n, quadratic);
  } catch (const std::exception& e) {
    return {field.to_string() + " n=" + std::to_string(n) + ": exception " + e.what()};
  }
}

std::vector<u64> sweep_divisors(const FieldProfile& field, u64 max_n) {
  u64 q = field.q();
  std::vector<u64> out;
  for (u64 n : divisors(q * q - 1))
    if (max_n == 0 || n <= max_n) out.push_back(n);
  return out;
}

void require_sweepable(const FieldProfile& field) {
  if (!field.is_finite()) throw PreconditionError("verify requires a finite field");
  (void)quadratic_embedding(field);
}

VerifyReport assemble(const FieldProfile& field, u64 max_n, const std::vector<u64>& ns,
                      std::vector<std::vector<std::string>>& bad, const std::vector<char>& quad) {
  VerifyReport r{field, max_n, ns.size(), 0, {}};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    r.quadratic += quad[i] ? 1 : 0;
    for (auto& s : bad[i]) r.mismatches.push_back(std::move(s));
  }
  return r;
}

std::vector<std::string> frobenius_one(const FieldProfile& field, u64& checked) {
  std::vector<std::string> bad;
  u64 q = field.q();
  for (u64 n : divisors(q * q - 1)) {
    if (!is_quadratic(field, n)) continue;
    ++checked;
    ResidueClass y = yogh(field, n);
    if (y != ResidueClass::of(static_cast<i64>(q), n))
      bad.push_back(field.to_string() + " n=" + std::to_string(n) + ": yogh " + y.to_string());
  }
  return bad;
}

}  // namespace

VerifyReport verify_field_serial(const FieldProfile& field, u64 max_n) {
  require_sweepable(field);
  auto emb = quadratic_embedding(field);
  auto ns = sweep_divisors(field, max_n);
  std::vector<std::vector<std::string>> bad(ns.size());
  std::vector<char> quad(ns.size(), 0);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    bool qd = false;
    bad[i] = check_guarded(field, *emb, ns[i], qd);
    quad[i] = qd;
  }
  return assemble(field, max_n, ns, bad, quad);
}

VerifyReport verify_field_parallel(const FieldProfile& field, u64 max_n) {
  require_sweepable(field);
  auto emb = quadratic_embedding(field);
  auto ns = sweep_divisors(field, max_n);
  std::vector<std::vector<std::string>> bad(ns.size());
  std::vector<char> quad(ns.size(), 0);
  const long count = static_cast<long>(ns.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    bool qd = false;
    bad[i] = check_guarded(field, *emb, ns[i], qd);
    quad[i] = qd;
  }
  return assemble(field, max_n, ns, bad, quad);
}

std::vector<FieldProfile> finite_fields_up_to(u64 max_q) {
  std::vector<FieldProfile> out;
  for (u64 q = 2; q <= max_q; ++q) {
    u64 p = 0;
    unsigned k = 0;
    if (prime_power_decompose(q, p, k)) out.push_back(FieldProfile::finite_field(p, k));
  }
  return out;
}

FrobeniusReport frobenius_sweep_serial(const std::vector<FieldProfile>& fields) {
  FrobeniusReport r;
  r.fields = fields.size();
  for (const auto& f : fields)
    for (auto& s : frobenius_one(f, r.checked)) r.mismatches.push_back(std::move(s));
  return r;
}

FrobeniusReport frobenius_sweep_parallel(const std::vector<FieldProfile>& fields) {
  std::vector<std::vector<std::string>> bad(fields.size());
  std::vector<u64> checked(fields.size(), 0);
  const long count = static_cast<long>(fields.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) bad[i] = frobenius_one(fields[i], checked[i]);
  FrobeniusReport r;
  r.fields = fields.size();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    r.checked += checked[i];
    for (auto& s : bad[i]) r.mismatches.push_back(std::move(s));
  }
  return r;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cyclokit
