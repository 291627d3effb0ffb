#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclokit {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  auto operator<=>(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

// A residue class value mod modulus, always stored reduced into [0, modulus).
// modulus == 1 is the single class of Z/1.
struct ResidueClass {
  u64 value = 0;
  u64 modulus = 1;

  static ResidueClass of(i64 v, u64 m);
  bool operator==(const ResidueClass&) const = default;
  std::string to_string() const;
};

inline constexpr u64 kMaxFactorInput = (u64{1} << 63) - 1;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);
// Exact integer power; throws SizeBoundError on overflow.
u64 ipow(u64 base, unsigned e);
u64 lcm_checked(u64 a, u64 b);

bool is_prime(u64 n);
// Trial division up to 2^20, Miller-Rabin and Pollard-Brent on the cofactor.
Factorization factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);
// If n is a prime power p^k with k >= 1, returns {p, k}.
bool prime_power_decompose(u64 n, u64& p, unsigned& k);

unsigned eps(u64 n, u64 p);
u64 pfree_quotient(u64 n, u64 p);
u64 euler_phi(u64 n);
u64 mult_order(u64 a, u64 m);
ResidueClass mod_inverse(i64 k, u64 j);
ResidueClass crt(std::span<const ResidueClass> parts);
i64 squarefree_kernel(i64 n);

// Minimal ring interfaces usable with waring_power_sum.
struct IntegerRing {
  using Element = i64;
  i64 from_int(i64 v) const { return v; }
  i64 add(i64 a, i64 b) const { return a + b; }
  i64 sub(i64 a, i64 b) const { return a - b; }
  i64 mul(i64 a, i64 b) const { return a * b; }
};

struct PrimeFieldRing {
  u64 p;
  using Element = u64;
  u64 from_int(i64 v) const { return ResidueClass::of(v, p).value; }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p); }
};

// Power sums x^t + y^t of the roots of X^2 - aX + b, so a = x + y and b = xy:
// s_t = a s_{t-1} - b s_{t-2}, s_0 = 2, s_1 = a.
template <class Ring>
typename Ring::Element waring_power_sum(const Ring& ring,
                                        const typename Ring::Element& a,
                                        const typename Ring::Element& b,
                                        u64 t) {
  auto prev = ring.from_int(2);
  if (t == 0) return prev;
  auto cur = a;
  for (u64 i = 1; i < t; ++i) {
    auto next = ring.sub(ring.mul(a, cur), ring.mul(b, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace cyclokit
