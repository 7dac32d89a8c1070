#pragma once

// Pre-Lie rings over a finite abelian p-group, stored as structure constants
// g_i . g_j on the standard generators and extended biadditively.

#include <functional>
#include <span>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/series.hpp"

namespace bracelab {

class PreLieRing {
 public:
  /// sc[i * r + j] = g_i . g_j. Only dimensions and ranges are checked here.
  PreLieRing(AbelianPGroup group, std::vector<Elem> structure_constants);

  static PreLieRing zero(const AbelianPGroup& g);
  /// Reads the structure constants off a biadditive product.
  static PreLieRing from_product(const AbelianPGroup& g, const std::function<Elem(Elem, Elem)>& product);

  const AbelianPGroup& group() const noexcept { return group_; }
  std::span<const Elem> structure_constants() const noexcept { return sc_; }
  Elem structure_constant(int i, int j) const {
    return sc_[static_cast<std::size_t>(i) * static_cast<std::size_t>(group_.rank()) + static_cast<std::size_t>(j)];
  }
  Elem dot(Elem a, Elem b) const noexcept;

  friend bool operator==(const PreLieRing& a, const PreLieRing& b) { return a.group_ == b.group_ && a.sc_ == b.sc_; }

 private:
  Elem compute_dot(Elem a, Elem b) const noexcept;

  AbelianPGroup group_;
  std::vector<Elem> sc_;
  std::vector<Elem> table_;  // cached products on small groups
};

/// Checks that structure constants respect generator orders and that the
/// associator is symmetric in its first two arguments. With all_triples the
/// identity is also checked on every triple of elements.
VerificationReport verify_prelie(const PreLieRing& p, bool all_triples = false);

Elem dot(const PreLieRing& p, Elem a, Elem b);

SeriesReport prelie_series(const PreLieRing& p, SeriesKind kind);

/// {a : a . A = 0}.
Subgroup socle(const PreLieRing& p);

/// S . A in S and A . S in S.
bool prelie_ideal_check(const PreLieRing& p, const Subgroup& s);

/// Additive closure of I . A. Throws NotAnIdeal when I is not an ideal.
Subgroup product_ideal(const PreLieRing& p, const Subgroup& ideal);

/// I_1 = A, I_{i+1} = I_i . I_i.
SeriesReport solvable_series(const PreLieRing& p);

/// [a, b] = a . b - b . a.
Elem lie_bracket(const PreLieRing& p, Elem a, Elem b);

/// Lower central series of the associated Lie ring; its index minus one is
/// the nilpotency class.
SeriesReport lie_lower_central_series(const PreLieRing& p);

/// The pre-Lie ring with a formal identity adjoined: pairs (r, m) with m
/// reduced mod p^n and (r, n)(s, m) = (rs + ns + mr, nm).
class DorrohRing {
 public:
  struct Element {
    Elem r = 0;
    Int m = 0;
    friend bool operator==(const Element&, const Element&) = default;
  };

  explicit DorrohRing(PreLieRing base);

  const PreLieRing& base() const noexcept { return base_; }
  Int integer_modulus() const noexcept { return modulus_; }
  Element one() const noexcept { return {0, 1 % modulus_}; }
  Element embed(Elem r) const noexcept { return {r, 0}; }
  Element add(const Element& x, const Element& y) const noexcept;
  Element mul(const Element& x, const Element& y) const noexcept;

  /// (0, 1) is a two-sided identity on every element.
  bool verify_identity() const;

 private:
  PreLieRing base_;
  Int modulus_;
};

DorrohRing dorroh_extend(const PreLieRing& p);

/// Recursive bound with s = 2 once A . A = 0 (right index 2) and one factor
/// (m + 1) per further step of the right chain: 2 (m+1)^{max(right-2, 0)}.
Int strong_recursion_bound(int right_index, int left_index);

struct StrongBoundReport {
  int left_index = 0;
  int right_index = 0;
  int strong_index = 0;
  Int recursion_bound = 0;
  Int order_bound = 0;  // (n+1)^{n+1}
  bool within_recursion = false;
  bool within_order_bound = false;

  bool passed() const noexcept { return within_recursion && within_order_bound; }
};

/// Throws NotNilpotent when the left or right chain does not reach 0.
StrongBoundReport strong_bound_check(const PreLieRing& p);

/// a (.) b = alpha (a . b).
PreLieRing scale_prelie(const PreLieRing& p, Int alpha);

}  // namespace bracelab
