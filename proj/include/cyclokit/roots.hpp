#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclokit/numtheory.hpp"

namespace cyclokit {

// The root zeta_den^num with gcd(num, den) = 1 and 0 <= num < den, under the
// coherent convention zeta_m = zeta_n^(n/m) for m | n. The identity is (0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;

  static RootOfUnity canonical(u64 n, i64 j);
  static RootOfUnity parse(std::string_view text);

  u64 numerator() const { return num_; }
  u64 denominator() const { return den_; }
  u64 order() const { return den_; }
  bool is_identity() const { return den_ == 1; }
  // Exponent of this root relative to zeta_n; requires order() | n.
  u64 exponent_in(u64 n) const;
  std::string to_string() const;

  auto operator<=>(const RootOfUnity&) const = default;

 private:
  // Declared denominator first so the default ordering sorts by order.
  u64 den_ = 1;
  u64 num_ = 0;
};

RootOfUnity canonical(u64 n, i64 j);
inline RootOfUnity zeta(u64 n) { return canonical(n, 1); }
RootOfUnity multiply(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity power(const RootOfUnity& z, i64 k);
RootOfUnity inverse(const RootOfUnity& z);
u64 primitive_order(const RootOfUnity& z);
// The component of z in mu_(d^inf), where d collects some primes of ord(z).
RootOfUnity primary_component(const RootOfUnity& z, u64 d);

// An element of the group ring Z[mu_inf]: a finite integer combination of
// roots. Kept normalized with zeta_2 = -1: stored roots have odd order or
// order divisible by 4 with exponent class in [0, 1/2).
class CycloSum {
 public:
  CycloSum() = default;
  static CycloSum constant(i64 c);
  static CycloSum root(const RootOfUnity& z, i64 coeff = 1);

  const std::map<RootOfUnity, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<i64> as_integer() const;
  // Least common order of the roots involved.
  u64 conductor() const;
  std::string to_string() const;

  CycloSum operator+(const CycloSum& o) const;
  CycloSum operator-(const CycloSum& o) const;
  CycloSum operator-() const;
  CycloSum operator*(const CycloSum& o) const;
  CycloSum operator*(i64 c) const;
  bool operator==(const CycloSum&) const = default;

 private:
  void add_term(const RootOfUnity& z, i64 coeff);
  std::map<RootOfUnity, i64> terms_;
};

// Finite (or explicitly infinite) subsets of mu_inf described by a small
// expression tree. InternalProduct is the set of products x_1 ... x_s.
class MuSubset {
 public:
  enum class Kind { Empty, All, Mu, PrimSet, InternalProduct, Difference, Union };

  static MuSubset empty();
  static MuSubset all();
  static MuSubset mu(u64 n);
  static MuSubset prim(u64 n);
  static MuSubset product(std::vector<MuSubset> factors);
  static MuSubset difference(MuSubset a, MuSubset b);
  static MuSubset union_of(std::vector<MuSubset> parts);

  Kind kind() const;
  u64 parameter() const;
  const std::vector<MuSubset>& operands() const;

  bool contains(const RootOfUnity& z) const;
  bool is_finite() const;
  // Some N with this set inside mu_N; nullopt when infinite.
  std::optional<u64> support() const;
  // Sorted by order then numerator; throws PreconditionError when infinite.
  std::vector<RootOfUnity> enumerate() const;
  u64 cardinality() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit MuSubset(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace cyclokit
