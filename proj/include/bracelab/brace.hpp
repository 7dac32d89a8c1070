#pragma once

// Left braces (A, +, o) given by a full o-table over a finite abelian p-group.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/series.hpp"

namespace bracelab {

class Brace {
 public:
  /// table[a * |A| + b] = a o b. Only dimensions and ranges are checked here;
  /// the axioms are checked by verify_brace.
  Brace(AbelianPGroup group, std::vector<Elem> circle_table);

  static Brace from_function(const AbelianPGroup& g, const std::function<Elem(Elem, Elem)>& circle);
  /// a o b = a + b.
  static Brace trivial(const AbelianPGroup& g);

  const AbelianPGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_.size(); }
  Elem circle(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * group_.size() + b]; }
  /// a * b = a o b - a - b.
  Elem star(Elem a, Elem b) const noexcept { return group_.sub(group_.sub(circle(a, b), a), b); }
  /// lambda_a(b) = a o b - a.
  Elem lambda(Elem a, Elem b) const noexcept { return group_.sub(circle(a, b), a); }
  std::span<const Elem> table() const noexcept { return table_; }

  friend bool operator==(const Brace& a, const Brace& b) { return a.group_ == b.group_ && a.table_ == b.table_; }

 private:
  AbelianPGroup group_;
  std::vector<Elem> table_;
};

struct VerifyOptions {
  /// Triple checks run exhaustively up to this many elements, sampled above.
  std::size_t max_exhaustive = 625;
  std::size_t samples = 200'000;
  std::uint64_t seed = 0x5eed;
};

/// Checks closure, identity 0, inverses, associativity and the compatibility
/// law a o (b + c) + a = a o b + a o c. Failures carry a witness tuple.
VerificationReport verify_brace(const Brace& b, const VerifyOptions& options = {});

Elem star(const Brace& b, Elem x, Elem y);
/// lambda_a as an additive endomorphism (images of the generators).
EndoMap lambda_map(const Brace& b, Elem a);

SeriesReport series(const Brace& b, SeriesKind kind);

/// (a+b)*c - a*c - b*c - sum_{i=0}^{2s} (-1)^{i+1} ((d_i*d_i')*c - d_i*(d_i'*c))
/// with d_0 = a, d_0' = b, d_{i+1} = d_i + d_i', d_{i+1}' = d_i * d_i'.
/// Zero whenever s is at least the strong nilpotency index.
Elem star_expansion_residual(const Brace& b, Elem x, Elem y, Elem z, int depth);
/// Same, with depth set to the strong index. Throws NotStronglyNilpotent.
Elem star_expansion_residual(const Brace& b, Elem x, Elem y, Elem z);

/// m-fold o-product; a^0 = 0.
Elem circle_power(const Brace& b, Elem a, std::uint64_t m);
Elem circle_inverse(const Brace& b, Elem a);

/// Closure of gens under o (a subgroup of (A, o) since A is finite).
std::vector<Elem> circle_subgroup(const Brace& b, std::span<const Elem> gens);

struct FrobeniusSubgroups {
  Subgroup multiples;  // p^i A
  Subgroup powers;     // additive closure of the o-subgroup <a^{o p^i}>
  /// The o-subgroup equals p^i A as a set.
  bool equal = false;
};

/// Requires p > n + 1, else HypothesisViolated.
FrobeniusSubgroups frobenius_subgroups(const Brace& b, int i);

/// a^{o p^i} * b - sum_k C(p^i, k) e_k with e_1 = a*b, e_{k+1} = a*e_k.
Elem power_star_residual(const Brace& b, Elem x, Elem y, int i);

/// S * A in S, A * S in S and lambda_a(S) = S for every a.
bool ideal_check(const Brace& b, const Subgroup& s);

}  // namespace bracelab
