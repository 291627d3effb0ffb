#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/numtheory.hpp"
#include "cyclokit/roots.hpp"

namespace cyclokit {

inline constexpr u64 kOracleMaxOrder = u64{1} << 20;

// F_{p^k} as F_p[x]/(f) with f the smallest monic irreducible of degree k,
// ordering polynomials by the base-p integer code sum c_i p^i.
class ExplicitField {
 public:
  using Element = std::vector<std::uint32_t>;

  ExplicitField(u64 p, unsigned k);

  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // Smallest (by code) generator of the multiplicative group.
  const Element& generator() const { return generator_; }

  Element zero() const;
  Element one() const;
  Element from_int(i64 v) const;
  Element from_code(u64 code) const;
  u64 code(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, u64 e) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;
  bool is_constant(const Element& a) const;
  // Smallest t >= 1 with a^t = 1.
  u64 element_order(const Element& a) const;
  std::string to_string(const Element& a) const;

 private:
  u64 p_;
  unsigned k_;
  u64 order_;
  std::vector<std::uint32_t> modulus_;
  Element generator_;
};

// Throws SizeBoundError when p^k > 2^20.
ExplicitField build_field(u64 p, unsigned k);
// g^((|E|-1)/n) for the field's generator g.
ExplicitField::Element find_root_of_unity(const ExplicitField& E, u64 n);

// A field element reported to callers: coefficient vector in the oracle
// basis, plus the integer value whenever the element lies in the prime field.
struct FieldValue {
  std::vector<std::uint32_t> coeffs;
  std::optional<i64> integer;

  std::string to_string() const;
  bool operator==(const FieldValue&) const = default;
};

// F_q inside F_{q^2}, with zeta_N := g^((q^2-1)/N).
class QuadraticEmbedding {
 public:
  explicit QuadraticEmbedding(const FieldProfile& base);

  const FieldProfile& base() const { return base_; }
  const ExplicitField& field() const { return E_; }
  u64 q() const { return q_; }

  ExplicitField::Element root(const RootOfUnity& z) const;
  ExplicitField::Element evaluate(const CycloSum& s) const;
  bool in_base(const ExplicitField::Element& x) const;
  FieldValue value(const ExplicitField::Element& x) const;

 private:
  FieldProfile base_;
  u64 q_;
  ExplicitField E_;
};

// Cap on q for explicit embeddings; reads CYCLOKIT_MAX_Q, default 1024.
u64 oracle_max_q();
bool embedding_available(const FieldProfile& base);
// Shared, cached embedding; throws SizeBoundError outside the bound.
std::shared_ptr<const QuadraticEmbedding> quadratic_embedding(const FieldProfile& base);

// Order of zeta_n over F_q in the group F_q(zeta_n)^x / F_q^x, by search.
u64 brute_order(const FieldProfile& base, u64 n);
// The same search inside an existing F_{q^2}, for n | q^2 - 1.
u64 brute_order(const QuadraticEmbedding& emb, u64 n);

struct BruteMinPoly {
  FieldValue trace;
  FieldValue norm;
  // Smallest k in [1, n) with zeta^k equal to the conjugate zeta^q.
  u64 conjugate_exponent;
};
BruteMinPoly brute_min_poly(const FieldProfile& base, u64 n);
// Roots of unity in F_{q^2} not in F_q, via the generator powers.
std::vector<RootOfUnity> brute_moduli(const FieldProfile& base);

// Z[x]/Phi_n.
class CycloRing {
 public:
  using Element = std::vector<i64>;

  explicit CycloRing(u64 n);

  u64 n() const { return n_; }
  const std::vector<i64>& cyclotomic() const { return phi_; }
  std::size_t degree() const { return phi_.size() - 1; }

  Element zeta_power(i64 k) const;
  Element constant(i64 c) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element evaluate(const CycloSum& s) const;
  std::optional<i64> as_integer(const Element& a) const;

 private:
  Element reduce(std::vector<i64> a) const;
  u64 n_;
  std::vector<i64> phi_;
};

std::vector<i64> cyclotomic_polynomial(u64 n);

struct RationalMinPoly {
  i64 trace;
  i64 norm;
  u64 conjugate_exponent;
};
RationalMinPoly rational_min_poly(u64 n);

}  // namespace cyclokit
