#pragma once

// Regular subgroups of the holomorph Hol(A, +) = A x| Aut(A, +) obtained by
// twisting a pre-Lie ring with additive automorphisms.

#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/brace.hpp"
#include "bracelab/prelie.hpp"
#include "bracelab/series.hpp"

namespace bracelab {

struct HolomorphElement {
  Elem translation = 0;
  EndoMap automorphism;

  friend auto operator<=>(const HolomorphElement&, const HolomorphElement&) = default;
};

/// (a, f)(b, g) = (a + f(b), f g).
HolomorphElement compose(const AbelianPGroup& g, const HolomorphElement& x, const HolomorphElement& y);

/// A subset of the holomorph with one element per translation; elements[a]
/// has translation a.
struct RegularSubgroup {
  std::vector<HolomorphElement> elements;

  friend bool operator==(const RegularSubgroup&, const RegularSubgroup&) = default;
};

/// Size, one element per translation, bijective parts and closure under
/// composition (exhaustive).
VerificationReport verify_regular_subgroup(const AbelianPGroup& g, const RegularSubgroup& s);

/// Additive automorphisms f with f(a . b) = f(a) . f(b).
std::vector<EndoMap> prelie_automorphisms(const PreLieRing& p, const EnumerationLimits& limits = {});

/// One automorphism per class H f, H the pre-Lie automorphisms: the twist
/// below depends only on that class. Each representative is the smallest
/// member of its class.
std::vector<EndoMap> coset_representatives(const PreLieRing& p, const EnumerationLimits& limits = {});

/// a ._f b = f^{-1}(f(a) . f(b)). Throws NotAutomorphism.
PreLieRing twist(const PreLieRing& p, const EndoMap& f);

/// {(a, lambda_a)}; throws InvariantViolation when the result is not a
/// regular subgroup.
RegularSubgroup regular_subgroup(const Brace& b);

/// One regular subgroup per coset representative, built from the flows of the
/// twisted ring.
std::vector<RegularSubgroup> hopf_galois_structures(const PreLieRing& p, const EnumerationLimits& limits = {});

bool pairwise_distinct(const std::vector<RegularSubgroup>& subgroups);

/// Keeps the braces whose right series does not reach 0.
std::vector<Brace> not_right_nilpotent(const std::vector<Brace>& braces);

}  // namespace bracelab
