#pragma once

#include <cstddef>
#include <vector>

#include "cyclokit/field_profile.hpp"
#include "cyclokit/numtheory.hpp"

namespace cyclokit {

// U_n, sorted; for n = 1 the single class 0 mod 1.
struct UnitGroup {
  u64 modulus = 1;
  std::vector<ResidueClass> elements;
  std::size_t size() const { return elements.size(); }
  bool contains(u64 j) const;
};

// U_n(m): the units that are 1 mod m, for m | n.
struct FixingSubgroup {
  u64 modulus = 1;
  u64 fixed_modulus = 1;
  std::vector<ResidueClass> elements;
  std::size_t size() const { return elements.size(); }
  bool contains(u64 j) const;
};

UnitGroup unit_group(u64 n);
FixingSubgroup fixing_subgroup(u64 n, u64 m);
// The automorphism zeta -> zeta^j composed with zeta -> zeta^k.
ResidueClass compose(ResidueClass j, ResidueClass k);
// Exponents of Gal(F(zeta_n)/F) inside U_n, for degree at most 2.
std::vector<ResidueClass> galois_image(const FieldProfile& field, u64 n);

}  // namespace cyclokit
