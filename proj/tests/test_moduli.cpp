#include <doctest.h>

#include <numeric>
#include <set>

#include "cyclokit/errors.hpp"
#include "cyclokit/moduli.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/quadcyclo.hpp"
#include "cyclokit/verify.hpp"

using namespace cyclokit;

namespace {

const FieldProfile Q = FieldProfile::rationals();
const FieldProfile F3 = FieldProfile::finite_field(3);
const FieldProfile F5 = FieldProfile::finite_field(5);
const FieldProfile F7 = FieldProfile::finite_field(7);
const FieldProfile F23 = FieldProfile::finite_field(23);

std::vector<RootOfUnity> set_union(const SMaxPartition& part) {
  std::set<RootOfUnity> out;
  for (const auto& c : part.classes)
    for (const auto& z : c.moduli().enumerate()) out.insert(z);
  return {out.begin(), out.end()};
}

std::vector<u64> class_primes(const SMaxPartition& part, std::size_t i) { return part.classes.at(i).primes; }

// Squares of F_q inside the embedding, as codes.
std::set<u64> base_squares(const QuadraticEmbedding& emb) {
  const ExplicitField& E = emb.field();
  std::set<u64> out;
  for (u64 code = 1; code < E.order(); ++code) {
    auto x = E.from_code(code);
    if (emb.in_base(x)) out.insert(E.code(E.mul(x, x)));
  }
  return out;
}

}  // namespace

TEST_SUITE("moduli") {

TEST_CASE("p-primary moduli examples") {
  ModuliDescription a = m2p(F5, 2);
  CHECK(a.presentation.to_string() == "mu(8) - mu(4)");
  CHECK(a.cardinality == std::optional<u64>(4));
  CHECK(a.class_count == 1);
  ModuliDescription b = m2p(F5, 3);
  CHECK(b.presentation.enumerate().size() == 2);
  CHECK(b.class_count == 1);
  ModuliDescription c = m2p(Q, 5);
  CHECK(c.presentation.enumerate().empty());
  CHECK(c.class_count == 0);
  ModuliDescription d = m2p(F23, 2);
  CHECK(d.presentation.to_string() == "mu(16) - mu(2)");
  CHECK_THROWS_AS(m2p(F5, 5), PreconditionError);
}

TEST_CASE("p-primary moduli agree with the oracle") {
  for (const FieldProfile& F : finite_fields_up_to(64)) {
    auto brute = brute_moduli(F);
    for (u64 p : prime_divisors(F.q() * F.q() - 1)) {
      std::vector<RootOfUnity> expected;
      for (const auto& z : brute)
        if (pfree_quotient(z.order(), p) == 1) expected.push_back(z);
      ModuliDescription d = m2p(F, p);
      CHECK_MESSAGE(d.presentation.enumerate() == expected, F.to_string() << " p=" << p);
      CHECK(d.cardinality == std::optional<u64>(expected.size()));
    }
  }
}

TEST_CASE("order two elements") {
  CHECK(g2(F5).enumerate().size() == 4);
  CHECK(g2(F5).to_string() == "P(8) . mu(1)");
  CHECK(g2(F7).enumerate().size() == 6);
  CHECK(g2(Q).enumerate() == std::vector<RootOfUnity>{zeta(4), canonical(4, 3)});
  CHECK(g2(FieldProfile::finite_field(2, 3)).enumerate().empty());
  CHECK(g2_membership(F5, zeta(8)));
  CHECK_FALSE(g2_membership(F5, zeta(24)));
  CHECK(g2_membership(Q, zeta(4)));
  CHECK_THROWS_AS(g2_membership(F5, zeta(10)), PreconditionError);
  for (const FieldProfile& F : finite_fields_up_to(100)) {
    MuSubset G = g2(F);
    u64 N = F.q() * F.q() - 1;
    std::vector<RootOfUnity> direct;
    for (const auto& z : MuSubset::mu(N).enumerate())
      if (g2_membership(F, z)) direct.push_back(z);
    CHECK_MESSAGE(G.enumerate() == direct, F.to_string());
  }
}

TEST_CASE("star product examples") {
  CHECK(g2_star(F5, canonical(8, 3), canonical(8, 5)) == canonical(8, 7));
  CHECK(g2_star(F5, zeta(8), canonical(8, 3)) == canonical(8, 3));
  RootOfUnity x = multiply(zeta(4), zeta(3));
  RootOfUnity y = multiply(canonical(4, 3), canonical(3, 2));
  CHECK(g2_star(F7, x, y) == canonical(4, 3));
  CHECK_THROWS_AS(g2_star(F5, zeta(4), zeta(8)), PreconditionError);
}

TEST_CASE("star product group axioms") {
  for (u64 p : {5, 7, 13}) {
    FieldProfile F = FieldProfile::finite_field(p);
    auto G = g2(F).enumerate();
    std::set<RootOfUnity> Gs(G.begin(), G.end());
    RootOfUnity id = zeta(ipow(2, static_cast<unsigned>(ell(F, 2).value() + 1)));
    for (const auto& a : G) {
      CHECK(g2_star(F, id, a) == a);
      CHECK(g2_star(F, a, id) == a);
      unsigned inverses = 0;
      for (const auto& b : G) {
        RootOfUnity ab = g2_star(F, a, b);
        CHECK(Gs.count(ab) == 1);
        CHECK(ab == g2_star(F, b, a));
        if (ab == id) ++inverses;
        for (const auto& c : G) CHECK(g2_star(F, g2_star(F, a, b), c) == g2_star(F, a, g2_star(F, b, c)));
      }
      CHECK(inverses == 1);
    }
  }
}

TEST_CASE("field equality examples") {
  CHECK(field_equal(F5, 3, 8));
  CHECK_FALSE(field_equal(Q, 3, 4));
  CHECK(field_equal(Q, 3, 6));
  CHECK(field_equal(Q, 1, 2));
  CHECK_THROWS_AS(field_equal(Q, 3, 5), PreconditionError);
}

TEST_CASE("field equality against explicit subfields") {
  // F(zeta_n) = F(zeta_m) in F_{q^2} iff both generate the same subfield,
  // detected by whether each root lies in the base.
  for (const FieldProfile& F : finite_fields_up_to(49)) {
    auto emb = quadratic_embedding(F);
    const ExplicitField& E = emb->field();
    auto ds = divisors(E.order() - 1);
    for (u64 n : ds)
      for (u64 m : ds) {
        bool bn = emb->in_base(find_root_of_unity(E, n));
        bool bm = emb->in_base(find_root_of_unity(E, m));
        CHECK(field_equal(F, n, m) == (bn == bm));
      }
  }
  // Over Q, compare degrees of compositums by Phi_n degrees.
  for (u64 n : {1, 2, 3, 4, 6})
    for (u64 m : {1, 2, 3, 4, 6}) {
      u64 dn = cyclotomic_polynomial(n).size() - 1, dm = cyclotomic_polynomial(m).size() - 1;
      u64 dl = cyclotomic_polynomial(std::lcm(n, m)).size() - 1;
      CHECK(field_equal(Q, n, m) == (dn == dm && dl == dn));
    }
}

TEST_CASE("S_n examples") {
  CHECK(s_n(F5, 24) == std::vector<u64>{2, 3});
  CHECK(s_n(Q, 4) == std::vector<u64>{2});
  CHECK(s_n(F5, 4).empty());
}

TEST_CASE("S_max examples") {
  SMaxPartition a = s_max(F5);
  REQUIRE(a.classes.size() == 1);
  CHECK(class_primes(a, 0) == std::vector<u64>{2, 3});
  SMaxPartition b = s_max(Q);
  REQUIRE(b.classes.size() == 2);
  CHECK(class_primes(b, 0) == std::vector<u64>{2});
  CHECK(class_primes(b, 1) == std::vector<u64>{3});
  CHECK(b.classes[0].representative_n == 4);
  CHECK(b.classes[1].representative_n == 3);
  SMaxPartition c = s_max(F7);
  REQUIRE(c.classes.size() == 1);
  CHECK(class_primes(c, 0) == std::vector<u64>{2});
  SMaxPartition d = s_max(F23);
  REQUIRE(d.classes.size() == 1);
  CHECK(class_primes(d, 0) == std::vector<u64>{2, 3});
}

TEST_CASE("S_max over F_7 and F_23 from the oracle") {
  // Primes p with some quadratic root of p-power order, read off brute_moduli.
  for (const FieldProfile& F : {F7, F23}) {
    std::set<u64> primes;
    for (const auto& z : brute_moduli(F)) {
      u64 p = 0;
      unsigned e = 0;
      if (prime_power_decompose(z.order(), p, e)) primes.insert(p);
    }
    SMaxPartition part = s_max(F);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].primes == std::vector<u64>(primes.begin(), primes.end()));
  }
}

TEST_CASE("S_max union, disjointness and closed form") {
  std::vector<FieldProfile> fields = finite_fields_up_to(100);
  fields.push_back(Q);
  for (const FieldProfile& F : fields) {
    SMaxPartition part = s_max(F);
    SMaxPartition closed = s_max_closed_form(F);
    REQUIRE(part.classes.size() == closed.classes.size());
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      CHECK(part.classes[i].primes == closed.classes[i].primes);
      CHECK(part.classes[i].moduli().enumerate() == closed.classes[i].moduli().enumerate());
    }
    CHECK_MESSAGE(set_union(part) == full_moduli(F).enumerate(), F.to_string());
    std::set<u64> seen;
    for (const auto& c : part.classes)
      for (u64 p : c.primes) CHECK(seen.insert(p).second);
    if (F.is_finite()) CHECK(part.classes.size() <= 1);
  }
}

TEST_CASE("field equality matches S_max classes") {
  std::vector<FieldProfile> fields = finite_fields_up_to(49);
  fields.push_back(Q);
  for (const FieldProfile& F : fields) {
    SMaxPartition part = s_max(F);
    std::vector<u64> quad;
    if (F.is_rational()) {
      quad = {3, 4, 6};
    } else {
      for (u64 n : divisors(F.q() * F.q() - 1))
        if (is_quadratic(F, n)) quad.push_back(n);
    }
    auto class_of = [&](u64 n) {
      for (std::size_t i = 0; i < part.classes.size(); ++i)
        if (part.classes[i].moduli().contains(zeta(n))) return static_cast<int>(i);
      return -1;
    };
    for (u64 n : quad) {
      REQUIRE(class_of(n) >= 0);
      for (u64 m : quad) CHECK(field_equal(F, n, m) == (class_of(n) == class_of(m)));
    }
  }
}

TEST_CASE("no larger 2-power shares a radical 2-power field") {
  for (const FieldProfile& F : finite_fields_up_to(100)) {
    if (F.characteristic() == 2) continue;
    for (unsigned e = 3; e <= 12; ++e) {
      u64 pe = ipow(2, e);
      if (!is_quadratic(F, pe) || order_of_zeta(F, pe) != 2) continue;
      for (unsigned f = e + 1; f <= 16; ++f) {
        u64 pf = ipow(2, f);
        CHECK_FALSE((extension_degree(F, pf) <= 2 && field_equal(F, pe, pf)));
      }
    }
  }
}

TEST_CASE("membership routes and full moduli examples") {
  CHECK(m2_membership(F23, zeta(48)));
  CHECK(m2_membership_kappa(F23, zeta(48)));
  CHECK_FALSE(m2_membership(F5, zeta(4)));
  CHECK_FALSE(m2_membership_kappa(F5, zeta(4)));
  CHECK(m2_membership(Q, zeta(6)));
  CHECK(m2_membership_kappa(Q, zeta(6)));
  CHECK(full_moduli(F5).to_string() == "mu(24) - mu(4)");
  CHECK(full_moduli(F5).cardinality() == 20);
  CHECK(full_moduli(Q).enumerate() ==
        std::vector<RootOfUnity>{zeta(3), canonical(3, 2), zeta(4), canonical(4, 3), zeta(6), canonical(6, 5)});
  CHECK(full_moduli(F3).cardinality() == 6);
}

TEST_CASE("three descriptions of the moduli agree") {
  for (u64 q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 23, 25, 27}) {
    FieldProfile F = parse_field_spec("q:" + std::to_string(q));
    std::vector<RootOfUnity> by_degree, by_kappa;
    for (const auto& z : MuSubset::mu(q * q - 1).enumerate()) {
      if (m2_membership(F, z)) by_degree.push_back(z);
      if (m2_membership_kappa(F, z)) by_kappa.push_back(z);
    }
    auto presented = full_moduli(F).enumerate();
    CHECK(by_degree == presented);
    CHECK(by_kappa == presented);
    CHECK(brute_moduli(F) == presented);
  }
}

TEST_CASE("radical classes") {
  QuadClass c4 = chi_rad(Q, 4);
  CHECK(c4.squarefree == std::optional<i64>(-1));
  CHECK(c4.value.integer == std::optional<i64>(-4));
  CHECK(chi_rad(Q, 3).squarefree == std::optional<i64>(-3));
  CHECK(chi_rad(Q, 6).squarefree == std::optional<i64>(-3));
  QuadClass c = chi_rad(F23, 16);
  CHECK(c.nonresidue == std::optional<bool>(true));
  CHECK(c.nontrivial);
  CHECK_THROWS_AS(chi_rad(FieldProfile::finite_field(2, 2), 5), PreconditionError);
  CHECK_THROWS_AS(chi_rad(F5, 4), PreconditionError);
}

TEST_CASE("radical classes are non-squares for odd q <= 100") {
  for (const FieldProfile& F : finite_fields_up_to(100)) {
    if (F.characteristic() == 2) continue;
    auto emb = quadratic_embedding(F);
    const ExplicitField& E = emb->field();
    auto squares = base_squares(*emb);
    for (u64 n : divisors(F.q() * F.q() - 1)) {
      if (!is_quadratic(F, n)) continue;
      QuadClass c = chi_rad(F, n);
      CHECK(c.nontrivial);
      // Independent discriminant T^2 - 4N from the oracle polynomial.
      BruteMinPoly bp = brute_min_poly(F, n);
      auto zt = find_root_of_unity(E, n);
      auto T = E.add(zt, E.pow(zt, F.q()));
      auto N = E.mul(zt, E.pow(zt, F.q()));
      auto D = E.sub(E.mul(T, T), E.mul(E.from_int(4), N));
      CHECK(emb->value(T) == bp.trace);
      CHECK(emb->value(D) == c.value);
      CHECK(squares.count(E.code(D)) == 0);
    }
  }
}

TEST_CASE("Artin-Schreier classes") {
  for (auto [p, k, n] : std::vector<std::tuple<u64, unsigned, u64>>{{2, 1, 3}, {2, 2, 5}, {2, 3, 3}}) {
    QuadClass c = chi_as(FieldProfile::finite_field(p, k), n);
    CHECK(c.trace_bit == std::optional<unsigned>(1));
    CHECK(c.nontrivial);
  }
  CHECK(chi_as(FieldProfile::finite_field(2), 3).value.integer == std::optional<i64>(1));
  CHECK_THROWS_AS(chi_as(F5, 3), PreconditionError);
}

TEST_CASE("Artin-Schreier classes lie outside x^2 + x") {
  for (unsigned k : {1, 2, 3, 4, 5}) {
    FieldProfile F = FieldProfile::finite_field(2, k);
    auto emb = quadratic_embedding(F);
    const ExplicitField& E = emb->field();
    std::set<u64> image;
    for (u64 code = 0; code < E.order(); ++code) {
      auto x = E.from_code(code);
      if (emb->in_base(x)) image.insert(E.code(E.add(E.mul(x, x), x)));
    }
    for (u64 n : divisors(F.q() * F.q() - 1)) {
      if (!is_quadratic(F, n)) continue;
      QuadClass c = chi_as(F, n);
      CHECK(c.trace_bit == std::optional<unsigned>(1));
      ExplicitField::Element v(c.value.coeffs.begin(), c.value.coeffs.end());
      CHECK(image.count(E.code(v)) == 0);
    }
  }
}

TEST_CASE("quadratic moduli summary") {
  CHECK(quad_moduli_summary(F5).separable_classes == std::optional<u64>(1));
  CHECK(quad_moduli_summary(F5).inseparable_classes == 0);
  CHECK(quad_moduli_summary(FieldProfile::finite_field(2, 2)).separable_classes == std::optional<u64>(1));
  CHECK_FALSE(quad_moduli_summary(Q).separable_classes);
  CHECK(quad_moduli_summary(Q).inseparable_classes == 0);
}

TEST_CASE("inseparable relation collapses over F_{2^k}") {
  for (unsigned k : {1, 2, 3, 4}) {
    ExplicitField E(2, k);
    for (u64 a = 1; a < E.order(); ++a)
      for (u64 b = 1; b < E.order(); ++b) CHECK(inseparable_equivalent(E, E.from_code(a), E.from_code(b)));
  }
  CHECK_THROWS_AS(inseparable_equivalent(ExplicitField(3, 1), ExplicitField(3, 1).one(), ExplicitField(3, 1).one()),
                  PreconditionError);
}

TEST_CASE("nu_2 branch values for q <= 100") {
  for (const FieldProfile& F : finite_fields_up_to(100)) {
    if (F.characteristic() == 2) continue;
    u64 l = ell(F, 2).value();
    u64 expected = l + 1;
    if (l == 1) {
      expected = 0;
      for (unsigned k = 2; k <= 20; ++k) {
        u64 pk = ipow(2, k);
        if (extension_degree(F, pk) <= 2 && field_equal(F, pk, 4)) expected = k;
      }
    }
    CHECK_MESSAGE(nu(F, 2) == ExtendedNat::finite(expected), F.to_string());
  }
}

}  // TEST_SUITE
