#pragma once

#include <optional>
#include <string>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/numtheory.hpp"
#include "cyclokit/oracle.hpp"
#include "cyclokit/roots.hpp"

namespace cyclokit {

// Shape of the minimal polynomial of zeta_n over F when [F(zeta_n):F] = 2.
// Odd: o_F(zeta_n) odd. Radical: o_F(zeta_n) = 2. The remaining cases have
// even order above 2 and are split by how the 2-primary part moves.
enum class QuadCase { Odd, TwoHighPlus, TwoLow, TwoHighMinus, Radical };

std::string to_string(QuadCase c);

struct QuadMinPoly {
  u64 n = 0;
  QuadCase case_tag = QuadCase::Odd;
  // Exponent of the nontrivial automorphism: zeta_n -> zeta_n^yogh.
  ResidueClass yogh;
  RootOfUnity conjugate;
  CycloSum trace;
  CycloSum norm;
  // Factored forms such as "z(3,1)*(z(5,1) + z(5,4))".
  std::string trace_display;
  std::string norm_display;
  std::optional<FieldValue> trace_concrete;
  std::optional<FieldValue> norm_concrete;

  std::string polynomial() const;
};

bool is_quadratic(const FieldProfile& field, u64 n);
u64 t_nF(const FieldProfile& field, u64 n);
ResidueClass yogh(const FieldProfile& field, u64 n);
// Fills the concrete coefficients when an explicit embedding is available
// (finite fields within the oracle bound) or the field is Q.
QuadMinPoly min_poly(const FieldProfile& field, u64 n);
QuadMinPoly min_poly_symbolic(const FieldProfile& field, u64 n);

struct RadicalGenerator {
  CycloSum element;  // zeta_n - zeta_n^yogh
  CycloSum square;
  std::optional<FieldValue> square_value;
  std::string polynomial() const;
};

struct ArtinSchreierGenerator {
  CycloSum numerator;    // zeta_n
  CycloSum denominator;  // zeta_n + zeta_n^yogh
  // The constant c of x^2 + x + c, as norm / trace^2.
  CycloSum constant_numerator;
  CycloSum constant_denominator;
  std::optional<FieldValue> constant_value;
  std::string polynomial() const;
};

RadicalGenerator radical_generator(const FieldProfile& field, u64 n);
ArtinSchreierGenerator artin_schreier_generator(const FieldProfile& field, u64 n);

bool is_order_two(const FieldProfile& field, u64 n);
// The exponent e witnessing the property, if the field has it.
std::optional<unsigned> has_property_C2(const FieldProfile& field);
ExtendedNat nu_plus(const FieldProfile& field, u64 p);
ExtendedNat nu(const FieldProfile& field, u64 p);

enum class KappaBranch { Plus, Minus, TwoTimes };
std::string to_string(KappaBranch b);

struct KappaClass {
  KappaBranch branch = KappaBranch::Plus;
  u64 t = 1;
  u64 two_power = 1;  // 2^eps(n, 2)
  CycloSum representative;
  bool in_field = false;
};

KappaClass kappa_class(const FieldProfile& field, const RootOfUnity& z);

}  // namespace cyclokit
