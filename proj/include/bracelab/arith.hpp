#pragma once

// Exact arithmetic modulo p^n.

#include <compare>
#include <cstdint>
#include <ostream>

namespace bracelab {

using Int = std::int64_t;

/// A residue normalized to [0, m) for the modulus it was produced under.
struct Residue {
  Int value = 0;

  friend auto operator<=>(const Residue&, const Residue&) = default;
  friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value; }
};

bool is_prime(Int n);

/// The modulus p^n for an odd prime p. The product of two reduced residues
/// is formed in 128 bits, so p^n is capped below 2^62.
class Modulus {
 public:
  Modulus(Int p, int n);

  Int prime() const noexcept { return p_; }
  int exponent() const noexcept { return n_; }
  Int value() const noexcept { return value_; }

  Residue reduce(Int x) const noexcept;
  Residue add(Residue a, Residue b) const noexcept;
  Residue sub(Residue a, Residue b) const noexcept;
  Residue mul(Residue a, Residue b) const noexcept;
  Residue neg(Residue a) const noexcept;
  Residue pow(Residue base, std::uint64_t e) const noexcept;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Int p_;
  int n_;
  Int value_;
};

/// Inverse of x modulo p^n. Throws NotInvertible when p divides x.
Residue mod_inverse(Residue x, const Modulus& m);

/// Smallest primitive root modulo the odd prime p.
Residue primitive_root(Int p);

/// The (p-1)-th root of unity gamma^(p^(n-1)) mod p^n, gamma the smallest
/// primitive root mod p. Congruent to gamma modulo p.
Residue teichmueller_xi(const Modulus& m);

/// (k!)^-1 mod p^n for 0 <= k < p.
Residue factorial_inverse(Int k, const Modulus& m);

/// -(1 + p + ... + p^(n-1)) mod p^n, the inverse of p - 1.
Residue geometric_scalar(const Modulus& m);

/// Binomial coefficient C(top, k) reduced mod p^n. Exact for any top >= 0,
/// including when the binomial is divisible by p.
Residue binomial_mod(Int top, Int k, const Modulus& m);

/// Multiplicative order of x modulo p (x not divisible by p).
Int multiplicative_order_mod_p(Int x, Int p);

}  // namespace bracelab
