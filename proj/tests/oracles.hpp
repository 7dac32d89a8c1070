#pragma once

// Brute-force reference computations. They use plain integer loops and share
// no code with the library beyond the element index convention.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using I = std::int64_t;

inline I ipow(I b, int e) {
  I r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline I mulmod(I a, I b, I m) { return static_cast<I>(static_cast<__int128>(a) * b % m); }

inline I powmod(I b, I e, I m) {
  I r = 1 % m;
  b %= m;
  for (I i = 0; i < e; ++i) r = mulmod(r, b, m);
  return r;
}

/// Smallest y in [0, m) with x * y = 1 mod m, or -1.
inline I inverse(I x, I m) {
  for (I y = 0; y < m; ++y)
    if (mulmod(((x % m) + m) % m, y, m) == 1 % m) return y;
  return -1;
}

inline bool is_prime(I n) {
  if (n < 2) return false;
  for (I d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline I order_mod(I x, I m) {
  I y = x % m;
  for (I k = 1; k <= m; ++k) {
    if (y == 1) return k;
    y = mulmod(y, x, m);
  }
  return 0;
}

inline I primitive_root(I p) {
  for (I g = 2; g < p; ++g)
    if (order_mod(g, p) == p - 1) return g;
  return 1;  // p = 2
}

/// The unique x = g mod p with x^{p-1} = 1 mod p^n, found by scanning the lifts.
inline I root_of_unity_lift(I p, int n) {
  const I g = primitive_root(p);
  const I m = ipow(p, n);
  for (I x = g; x < m; x += p)
    if (powmod(x, p - 1, m) == 1) return x;
  return -1;
}

/// |Aut(Z/p^{e_1} x ... x Z/p^{e_r})| from the closed form for finite abelian
/// p-groups (exponents sorted ascending, c_k / d_k the first / last positions
/// of the value e_k).
inline I automorphism_count(I p, std::vector<int> e) {
  std::sort(e.begin(), e.end());
  const int r = static_cast<int>(e.size());
  I total = 1;
  for (int k = 1; k <= r; ++k) {
    int d = k, c = k;
    while (d < r && e[static_cast<std::size_t>(d)] == e[static_cast<std::size_t>(k - 1)]) ++d;
    while (c > 1 && e[static_cast<std::size_t>(c - 2)] == e[static_cast<std::size_t>(k - 1)]) --c;
    total *= ipow(p, d) - ipow(p, k - 1);
    total *= ipow(ipow(p, e[static_cast<std::size_t>(k - 1)]), r - d);
    total *= ipow(ipow(p, e[static_cast<std::size_t>(k - 1)] - 1), r - c + 1);
  }
  return total;
}

/// sum_{i=0}^{p-2} xi^{p-1-i} ((xi^i a) * b) in the radical brace a o b = a + b + p a b
/// on Z/p^n, evaluated with plain integers.
inline I radical_average(I p, int n, I a, I b) {
  const I m = ipow(p, n);
  const I xi = root_of_unity_lift(p, n);
  I sum = 0;
  for (I i = 0; i <= p - 2; ++i) {
    I x = mulmod(powmod(xi, i, m), a, m);
    I star = mulmod(p, mulmod(x, b, m), m);
    sum = (sum + mulmod(powmod(xi, p - 1 - i, m), star, m)) % m;
  }
  return sum;
}

/// The preimage of a under a permutation, found by walking its cycle.
inline std::uint32_t cycle_predecessor(const std::vector<std::uint32_t>& perm, std::uint32_t a) {
  std::uint32_t x = a;
  while (perm[x] != a) x = perm[x];
  return x;
}

}  // namespace oracle
