#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/roots.hpp"

namespace cyclokit {

struct ModuliDescription {
  std::string kind;
  MuSubset presentation = MuSubset::empty();
  std::optional<u64> cardinality;  // nullopt when infinite
  u64 class_count = 0;
};

// Roots of p-power order that generate a quadratic extension.
ModuliDescription m2p(const FieldProfile& field, u64 p);

// Roots of order two over F.
MuSubset g2(const FieldProfile& field);
bool g2_membership(const FieldProfile& field, const RootOfUnity& z);
// Product on G2: 2-primary exponents multiply, odd parts multiply.
RootOfUnity g2_star(const FieldProfile& field, const RootOfUnity& x, const RootOfUnity& y);

// Whether F(zeta_n) = F(zeta_m), for extensions of degree at most 2.
bool field_equal(const FieldProfile& field, u64 n, u64 m);
// Primes dividing o_F(zeta_n).
std::vector<u64> s_n(const FieldProfile& field, u64 n);

struct SMaxClass {
  std::vector<u64> primes;
  u64 representative_n = 1;
  MuSubset mu_M = MuSubset::mu(1);
  MuSubset mu_MF = MuSubset::mu(1);
  MuSubset moduli() const { return MuSubset::difference(mu_M, mu_MF); }
};

struct SMaxPartition {
  std::vector<SMaxClass> classes;
};

// Union-find over candidate primes, joined by equality of the generated fields.
SMaxPartition s_max(const FieldProfile& field);
// Direct description: one class for F_q, {2} and {3} for Q.
SMaxPartition s_max_closed_form(const FieldProfile& field);

// Membership of z in the quadratic moduli space, through the degree.
bool m2_membership(const FieldProfile& field, const RootOfUnity& z);
// The same, through kappa_F.
bool m2_membership_kappa(const FieldProfile& field, const RootOfUnity& z);
MuSubset full_moduli(const FieldProfile& field);

struct QuadClass {
  enum class Kind { SquareClass, ArtinSchreier };
  Kind kind = Kind::SquareClass;
  bool nontrivial = false;
  FieldValue value;                    // discriminant, or norm / trace^2
  std::optional<i64> squarefree;       // Q only
  std::optional<bool> nonresidue;      // F_q, odd characteristic
  std::optional<unsigned> trace_bit;   // F_q, characteristic 2
};

QuadClass chi_rad(const FieldProfile& field, u64 n);
QuadClass chi_as(const FieldProfile& field, u64 n);

struct QuadModuliSummary {
  std::optional<u64> separable_classes;  // nullopt when infinite
  std::string separable_index;
  u64 inseparable_classes = 0;
};

QuadModuliSummary quad_moduli_summary(const FieldProfile& field);
// a ~ a2 iff a = c^2 a2 - b^2 for some b and some c != 0, in characteristic 2.
bool inseparable_equivalent(const ExplicitField& E, const ExplicitField::Element& a,
                            const ExplicitField::Element& a2);

}  // namespace cyclokit
