#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclokit/numtheory.hpp"
#include "cyclokit/roots.hpp"

namespace cyclokit {

class ExtendedNat {
 public:
  static ExtendedNat finite(u64 v) { return ExtendedNat(v); }
  static ExtendedNat infinity() { return ExtendedNat(); }

  bool is_finite() const { return value_.has_value(); }
  u64 value() const;
  std::string to_string() const;

  bool operator==(const ExtendedNat&) const = default;
  std::strong_ordering operator<=>(const ExtendedNat& o) const;

 private:
  ExtendedNat() = default;
  explicit ExtendedNat(u64 v) : value_(v) {}
  std::optional<u64> value_;
};

// Either Q or F_q with q = p^k.
class FieldProfile {
 public:
  static FieldProfile rationals();
  static FieldProfile finite_field(u64 p, unsigned k = 1);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  u64 characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  // q = p^k; only for finite fields.
  u64 q() const;
  std::string to_string() const;

  bool operator==(const FieldProfile&) const = default;

 private:
  u64 p_ = 0;
  unsigned k_ = 0;
  u64 q_ = 0;
};

// "Q", "q:<p>", "q:<p>^<k>" or "q:<prime power>".
FieldProfile parse_field_spec(std::string_view spec);

enum class Sign { Plus, Minus };

void require_coprime_to_char(const FieldProfile& field, u64 n);

u64 n_F(const FieldProfile& field, u64 n);
u64 order_of_zeta(const FieldProfile& field, u64 n);
ExtendedNat ell(const FieldProfile& field, u64 p);
bool contains_root(const FieldProfile& field, const RootOfUnity& z);
// Degree [F(zeta_n) : F].
u64 extension_degree(const FieldProfile& field, u64 n);
ResidueClass frobenius_exponent(const FieldProfile& field, u64 n);
// Exponents j (units mod N) of the automorphisms zeta -> zeta^j of F(mu_N)/F.
std::vector<u64> galois_exponents(const FieldProfile& field, u64 N);

// Whether x^m = -1 for x of order t, in the given characteristic.
bool power_is_minus_one(const FieldProfile& field, u64 t, u64 m);
// Whether zeta_t + s zeta_t^-1 is fixed by zeta -> zeta^j.
bool pair_fixed_by(const FieldProfile& field, u64 t, Sign s, u64 j);
bool cos_sum_in_field(const FieldProfile& field, u64 n, Sign s);

}  // namespace cyclokit
