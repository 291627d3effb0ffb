#include "cyclokit/automorphisms.hpp"

#include <algorithm>
#include <numeric>

#include "cyclokit/errors.hpp"
#include "cyclokit/quadcyclo.hpp"
#include "cyclokit/roots.hpp"

namespace cyclokit {

namespace {

bool sorted_contains(const std::vector<ResidueClass>& elems, u64 modulus, u64 j) {
  ResidueClass r{j % modulus, modulus};
  return std::binary_search(elems.begin(), elems.end(), r,
                            [](const ResidueClass& a, const ResidueClass& b) { return a.value < b.value; });
}

}  // namespace

bool UnitGroup::contains(u64 j) const { return sorted_contains(elements, modulus, j); }
bool FixingSubgroup::contains(u64 j) const { return sorted_contains(elements, modulus, j); }

UnitGroup unit_group(u64 n) {
  if (n == 0) throw PreconditionError("unit_group requires n >= 1");
  UnitGroup out{n, {}};
  if (n == 1) {
    out.elements.push_back({0, 1});
    return out;
  }
  for (u64 j = 1; j < n; ++j)
    if (std::gcd(j, n) == 1) out.elements.push_back({j, n});
  return out;
}

FixingSubgroup fixing_subgroup(u64 n, u64 m) {
  if (m == 0 || n == 0 || n % m != 0) throw PreconditionError("fixing_subgroup requires m | n");
  FixingSubgroup out{n, m, {}};
  for (const auto& j : unit_group(n).elements)
    if (j.value % m == 1 % m) out.elements.push_back(j);
  return out;
}

ResidueClass compose(ResidueClass j, ResidueClass k) {
  if (j.modulus != k.modulus) throw PreconditionError("compose requires equal moduli");
  return {mul_mod(j.value, k.value, j.modulus), j.modulus};
}

std::vector<ResidueClass> galois_image(const FieldProfile& field, u64 n) {
  if (contains_root(field, zeta(n))) return {ResidueClass::of(1, n)};
  if (!is_quadratic(field, n))
    throw PreconditionError("galois_image requires [F(zeta_n):F] <= 2");
  ResidueClass y = yogh(field, n);
  return {ResidueClass::of(1, n), y};
}

}  // namespace cyclokit
