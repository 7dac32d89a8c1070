#pragma once

// Finite abelian p-groups Z/p^e1 x ... x Z/p^er with e1 >= ... >= er.
//
// Elements are addressed by a dense index: coordinates in row-major order,
// the last coordinate varying fastest. For a cyclic group the index is the
// residue itself.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bracelab/arith.hpp"

namespace bracelab {

using Elem = std::uint32_t;

struct GroupElement {
  std::vector<Int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Caps applied to exhaustive searches.
struct EnumerationLimits {
  std::size_t max_group_size = 625;
  std::uint64_t max_candidates = 10'000'000;
};

class AbelianPGroup {
 public:
  /// Largest group the index representation supports.
  static constexpr std::size_t kMaxSize = std::size_t{1} << 22;

  AbelianPGroup(Int p, std::vector<int> invariants);

  static AbelianPGroup cyclic(Int p, int e) { return AbelianPGroup(p, {e}); }

  Int prime() const noexcept { return p_; }
  const std::vector<int>& invariants() const noexcept { return invariants_; }
  int rank() const noexcept { return static_cast<int>(invariants_.size()); }
  /// n with |A| = p^n.
  int log_order() const noexcept { return log_order_; }
  std::size_t size() const noexcept { return size_; }
  /// Coefficient modulus p^max(n,1); every element is killed by it.
  Modulus modulus() const { return Modulus(p_, log_order_ > 0 ? log_order_ : 1); }
  Int component_order(int i) const { return moduli_[static_cast<std::size_t>(i)]; }

  Elem zero() const noexcept { return 0; }
  Elem generator(int i) const { return static_cast<Elem>(strides_[static_cast<std::size_t>(i)]); }

  Int coordinate(Elem a, int i) const noexcept {
    auto k = static_cast<std::size_t>(i);
    return (static_cast<Int>(a) / strides_[k]) % moduli_[k];
  }

  Elem add(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// c * a for any integer c (negative allowed).
  Elem scale(Int c, Elem a) const noexcept;
  /// Additive order of a.
  Int order(Elem a) const noexcept;

  GroupElement element(Elem a) const;
  /// Index of a coordinate tuple; coordinates must already be reduced.
  Elem index(const GroupElement& g) const;
  /// Index of a coordinate tuple after reducing coordinate i mod p^{e_i}.
  Elem index_reduced(std::span<const Int> coords) const;

  friend bool operator==(const AbelianPGroup& a, const AbelianPGroup& b) {
    return a.p_ == b.p_ && a.invariants_ == b.invariants_;
  }

 private:
  Int p_;
  std::vector<int> invariants_;
  std::vector<Int> moduli_;
  std::vector<Int> strides_;
  std::size_t size_ = 1;
  int log_order_ = 0;
};

/// Coordinatewise c * a.
GroupElement scalar_mul(const AbelianPGroup& g, Int c, const GroupElement& a);

/// An additive subgroup, stored as its full element set.
class Subgroup {
 public:
  static Subgroup trivial(const AbelianPGroup& g);
  static Subgroup whole(const AbelianPGroup& g);

  const AbelianPGroup& group() const noexcept { return group_; }
  bool contains(Elem a) const noexcept { return member_[a] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  /// Sorted ascending by index.
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  /// A generating set of at most log_p |S| elements.
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  friend class SubgroupBuilder;
  explicit Subgroup(const AbelianPGroup& g);

  AbelianPGroup group_;
  std::vector<char> member_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

/// Grows a subgroup one generator at a time.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const AbelianPGroup& g);

  /// Adds g; returns true if the subgroup grew.
  bool add(Elem g);
  bool contains(Elem a) const noexcept { return current_.member_[a] != 0; }
  std::size_t size() const noexcept { return current_.elements_.size(); }
  Subgroup finish() &&;
  Subgroup snapshot() const;

 private:
  Subgroup current_;
};

/// Smallest subgroup containing gens.
Subgroup subgroup_closure(const AbelianPGroup& g, std::span<const Elem> gens);

/// {a : p^i a = 0}.
Subgroup annihilator(const AbelianPGroup& g, int i);

/// {p^i a : a in S}.
Subgroup multiples(const Subgroup& s, int i);

/// Additive endomorphism given by the images of the standard generators.
struct EndoMap {
  std::vector<Elem> images;

  friend auto operator<=>(const EndoMap&, const EndoMap&) = default;
};

EndoMap identity_map(const AbelianPGroup& g);
/// Multiplication by c.
EndoMap scalar_map(const AbelianPGroup& g, Int c);
/// Image of generator i has order dividing p^{e_i}.
bool is_well_defined(const AbelianPGroup& g, const EndoMap& f);
Elem apply(const AbelianPGroup& g, const EndoMap& f, Elem a);
/// The full table a -> f(a).
std::vector<Elem> tabulate(const AbelianPGroup& g, const EndoMap& f);
/// f after g.
EndoMap compose(const AbelianPGroup& g, const EndoMap& f, const EndoMap& h);
bool is_bijective(const AbelianPGroup& g, const EndoMap& f);
/// Throws NotAutomorphism when f is not bijective.
EndoMap inverse(const AbelianPGroup& g, const EndoMap& f);
/// Reads generator images off a full table of an additive map.
EndoMap from_table(const AbelianPGroup& g, std::span<const Elem> table);

/// All additive automorphisms, in lexicographic order of generator images.
std::vector<EndoMap> enumerate_automorphisms(const AbelianPGroup& g, const EnumerationLimits& limits = {});

}  // namespace bracelab
