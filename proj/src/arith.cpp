#include "bracelab/arith.hpp"

#include <limits>
#include <string>
#include <vector>

#include "bracelab/errors.hpp"

namespace bracelab {

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Modulus::Modulus(Int p, int n) : p_(p), n_(n), value_(1) {
  if (p < 3 || !is_prime(p)) throw InvalidPrime("modulus prime must be an odd prime, got " + std::to_string(p));
  if (n < 1) throw InvalidPrime("modulus exponent must be positive, got " + std::to_string(n));
  constexpr Int cap = Int{1} << 62;
  for (int i = 0; i < n; ++i) {
    if (value_ > cap / p) throw InvalidPrime("p^n exceeds the supported range");
    value_ *= p;
  }
}

Residue Modulus::reduce(Int x) const noexcept {
  Int r = x % value_;
  if (r < 0) r += value_;
  return {r};
}

Residue Modulus::add(Residue a, Residue b) const noexcept {
  Int s = a.value + b.value;
  if (s >= value_) s -= value_;
  return {s};
}

Residue Modulus::sub(Residue a, Residue b) const noexcept {
  Int s = a.value - b.value;
  if (s < 0) s += value_;
  return {s};
}

Residue Modulus::mul(Residue a, Residue b) const noexcept {
  auto prod = static_cast<__int128>(a.value) * b.value;
  return {static_cast<Int>(prod % value_)};
}

Residue Modulus::neg(Residue a) const noexcept { return a.value == 0 ? a : Residue{value_ - a.value}; }

Residue Modulus::pow(Residue base, std::uint64_t e) const noexcept {
  Residue result = reduce(1);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue mod_inverse(Residue x, const Modulus& m) {
  Int a = m.reduce(x.value).value;
  if (a % m.prime() == 0)
    throw NotInvertible(std::to_string(x.value) + " is not a unit mod " + std::to_string(m.value()));
  // Extended Euclid on (a, p^n).
  Int old_r = a, r = m.value();
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return m.reduce(old_s);
}

Int multiplicative_order_mod_p(Int x, Int p) {
  x %= p;
  if (x < 0) x += p;
  if (x == 0) throw NotInvertible("0 has no multiplicative order");
  Int order = 1;
  Int acc = x;
  while (acc != 1) {
    acc = acc * x % p;
    ++order;
  }
  return order;
}

Residue primitive_root(Int p) {
  if (p < 3 || !is_prime(p)) throw InvalidPrime("primitive_root needs an odd prime, got " + std::to_string(p));
  // Factor p - 1 once; g is primitive iff g^((p-1)/q) != 1 for each prime q | p - 1.
  std::vector<Int> factors;
  Int rest = p - 1;
  for (Int q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) factors.push_back(rest);

  Modulus mod_p(p, 1);
  for (Int g = 2; g < p; ++g) {
    bool primitive = true;
    for (Int q : factors) {
      if (mod_p.pow({g}, static_cast<std::uint64_t>((p - 1) / q)).value == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return {g};
  }
  return {1};  // p == 3 is handled above (g = 2); unreachable for odd primes
}

Residue teichmueller_xi(const Modulus& m) {
  Residue gamma = m.reduce(primitive_root(m.prime()).value);
  std::uint64_t e = 1;
  for (int i = 1; i < m.exponent(); ++i) e *= static_cast<std::uint64_t>(m.prime());
  return m.pow(gamma, e);
}

Residue factorial_inverse(Int k, const Modulus& m) {
  if (k < 0 || k >= m.prime())
    throw FactorialNotInvertible(std::to_string(k) + "! is not a unit mod " + std::to_string(m.value()));
  Residue f = m.reduce(1);
  for (Int i = 2; i <= k; ++i) f = m.mul(f, m.reduce(i));
  return mod_inverse(f, m);
}

Residue geometric_scalar(const Modulus& m) {
  Residue sum = m.reduce(0);
  Residue power = m.reduce(1);
  for (int i = 0; i < m.exponent(); ++i) {
    sum = m.add(sum, power);
    power = m.mul(power, m.reduce(m.prime()));
  }
  return m.neg(sum);
}

Residue binomial_mod(Int top, Int k, const Modulus& m) {
  if (k < 0 || top < 0 || k > top) return m.reduce(0);
  // C(top, k) = prod_{j=1..k} (top - j + 1) / j, tracking the p-adic valuation
  // separately so that only units are ever inverted.
  const Int p = m.prime();
  Residue unit = m.reduce(1);
  Int valuation = 0;
  for (Int j = 1; j <= k; ++j) {
    Int num = top - j + 1;
    Int den = j;
    while (num % p == 0) {
      num /= p;
      ++valuation;
    }
    while (den % p == 0) {
      den /= p;
      --valuation;
    }
    unit = m.mul(unit, m.reduce(num));
    unit = m.mul(unit, mod_inverse(m.reduce(den), m));
  }
  if (valuation >= m.exponent()) return m.reduce(0);
  Residue scale = m.pow(m.reduce(p), static_cast<std::uint64_t>(valuation));
  return m.mul(unit, scale);
}

}  // namespace bracelab
