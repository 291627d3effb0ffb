#include "cyclokit/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "cyclokit/errors.hpp"

namespace cyclokit {

namespace {

constexpr u64 kTrialBound = u64{1} << 20;

using u128 = unsigned __int128;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

ResidueClass ResidueClass::of(i64 v, u64 m) {
  if (m == 0) throw PreconditionError("residue class modulus must be positive");
  i64 r = static_cast<i64>(static_cast<__int128>(v) % static_cast<__int128>(m));
  if (r < 0) r += static_cast<i64>(m);
  return {static_cast<u64>(r), m};
}

std::string ResidueClass::to_string() const {
  return std::to_string(value) + " mod " + std::to_string(modulus);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

u64 ipow(u64 base, unsigned e) {
  u64 result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && result > UINT64_MAX / base)
      throw SizeBoundError("integer power overflows 64 bits");
    result *= base;
  }
  return result;
}

u64 lcm_checked(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u64 g = std::gcd(a, b);
  u64 x = a / g;
  if (x > UINT64_MAX / b) throw SizeBoundError("lcm overflows 64 bits");
  return x * b;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw PreconditionError("cannot factorize 0");
  if (n > kMaxFactorInput) throw SizeBoundError("factorization input exceeds bound");
  Factorization out;
  auto push = [&](u64 p) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  };
  for (u64 p = 2; p < kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_large(n, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) push(p);
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& pp : factorize(n)) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool prime_power_decompose(u64 n, u64& p, unsigned& k) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].prime;
  k = f[0].exponent;
  return true;
}

unsigned eps(u64 n, u64 p) {
  if (n == 0) throw PreconditionError("eps(n, p) requires n >= 1");
  if (p < 2 || !is_prime(p)) throw PreconditionError("eps(n, p) requires p prime");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

u64 pfree_quotient(u64 n, u64 p) {
  if (n == 0) throw PreconditionError("pfree_quotient requires n >= 1");
  if (p < 2 || !is_prime(p)) throw PreconditionError("pfree_quotient requires p prime");
  while (n % p == 0) n /= p;
  return n;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw PreconditionError("euler_phi requires n >= 1");
  u64 result = n;
  for (const auto& pp : factorize(n)) result = result / pp.prime * (pp.prime - 1);
  return result;
}

u64 mult_order(u64 a, u64 m) {
  if (m == 0) throw PreconditionError("mult_order requires m >= 1");
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) throw PreconditionError("mult_order requires gcd(a, m) = 1");
  u64 order = euler_phi(m);
  for (const auto& pp : factorize(order)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow_mod(a, order / pp.prime, m) == 1)
        order /= pp.prime;
      else
        break;
    }
  }
  return order;
}

ResidueClass mod_inverse(i64 k, u64 j) {
  if (j == 0) throw PreconditionError("mod_inverse requires j >= 1");
  if (j == 1) return {0, 1};
  __int128 a = ResidueClass::of(k, j).value;
  __int128 m = j;
  __int128 x0 = 1, x1 = 0;
  while (m != 0) {
    __int128 q = a / m;
    __int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw PreconditionError("mod_inverse requires gcd(k, j) = 1");
  x0 %= static_cast<__int128>(j);
  if (x0 < 0) x0 += j;
  return {static_cast<u64>(x0), j};
}

ResidueClass crt(std::span<const ResidueClass> parts) {
  ResidueClass acc{0, 1};
  for (const auto& part : parts) {
    if (part.modulus == 0) throw PreconditionError("crt modulus must be positive");
    if (std::gcd(acc.modulus, part.modulus) != 1)
      throw PreconditionError("crt requires pairwise coprime moduli");
    u64 m = lcm_checked(acc.modulus, part.modulus);
    // x = acc.value + acc.modulus * t, with t = (v - acc.value) / acc.modulus mod part.modulus
    u64 inv = mod_inverse(static_cast<i64>(acc.modulus % part.modulus), part.modulus).value;
    u64 diff = (part.value % part.modulus + part.modulus - acc.value % part.modulus) % part.modulus;
    u64 t = mul_mod(diff, inv, part.modulus);
    u64 x = (acc.value + mul_mod(acc.modulus, t, m)) % m;
    acc = {x, m};
  }
  return acc;
}

i64 squarefree_kernel(i64 n) {
  if (n == 0) throw PreconditionError("squarefree_kernel requires n != 0");
  i64 sign = n < 0 ? -1 : 1;
  u64 mag = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  i64 result = 1;
  for (const auto& pp : factorize(mag)) {
    if (pp.exponent % 2 == 1) result *= static_cast<i64>(pp.prime);
  }
  return sign * result;
}

}  // namespace cyclokit
