#include "bracelab/abelian.hpp"

#include <algorithm>
#include <string>

#include "bracelab/errors.hpp"

namespace bracelab {

AbelianPGroup::AbelianPGroup(Int p, std::vector<int> invariants) : p_(p), invariants_(std::move(invariants)) {
  if (p < 3 || !is_prime(p)) throw InvalidPrime("group prime must be an odd prime, got " + std::to_string(p));
  for (std::size_t i = 0; i < invariants_.size(); ++i) {
    if (invariants_[i] < 1) throw InvariantViolation("invariant factors must be positive exponents");
    if (i > 0 && invariants_[i] > invariants_[i - 1])
      throw InvariantViolation("invariant factors must be listed in non-increasing order");
  }
  const std::size_t r = invariants_.size();
  moduli_.resize(r);
  strides_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    Int m = 1;
    for (int k = 0; k < invariants_[i]; ++k) {
      m *= p;
      if (static_cast<std::size_t>(m) > kMaxSize)
        throw InvariantViolation("group too large for the index representation");
    }
    moduli_[i] = m;
    log_order_ += invariants_[i];
  }
  Int stride = 1;
  for (std::size_t k = r; k-- > 0;) {
    strides_[k] = stride;
    stride *= moduli_[k];
    if (static_cast<std::size_t>(stride) > kMaxSize)
      throw InvariantViolation("group too large for the index representation");
  }
  size_ = static_cast<std::size_t>(stride);
}

Elem AbelianPGroup::add(Elem a, Elem b) const noexcept {
  if (moduli_.size() == 1) {
    Int s = static_cast<Int>(a) + b;
    if (s >= moduli_[0]) s -= moduli_[0];
    return static_cast<Elem>(s);
  }
  Int result = 0;
  Int x = a, y = b;
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    Int m = moduli_[k];
    Int s = x % m + y % m;
    if (s >= m) s -= m;
    result += s * strides_[k];
    x /= m;
    y /= m;
  }
  return static_cast<Elem>(result);
}

Elem AbelianPGroup::neg(Elem a) const noexcept {
  Int result = 0;
  Int x = a;
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    Int m = moduli_[k];
    Int c = x % m;
    result += (c == 0 ? 0 : m - c) * strides_[k];
    x /= m;
  }
  return static_cast<Elem>(result);
}

Elem AbelianPGroup::scale(Int c, Elem a) const noexcept {
  Int result = 0;
  Int x = a;
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    Int m = moduli_[k];
    Int cm = c % m;
    if (cm < 0) cm += m;
    auto s = static_cast<Int>(static_cast<__int128>(x % m) * cm % m);
    result += s * strides_[k];
    x /= m;
  }
  return static_cast<Elem>(result);
}

Int AbelianPGroup::order(Elem a) const noexcept {
  Int ord = 1;
  Elem x = a;
  while (x != 0) {
    x = scale(p_, x);
    ord *= p_;
  }
  return ord;
}

GroupElement AbelianPGroup::element(Elem a) const {
  if (a >= size_) throw InvariantViolation("element index out of range");
  GroupElement g;
  g.coords.resize(moduli_.size());
  for (int i = 0; i < rank(); ++i) g.coords[static_cast<std::size_t>(i)] = coordinate(a, i);
  return g;
}

Elem AbelianPGroup::index(const GroupElement& g) const {
  if (g.coords.size() != moduli_.size()) throw InvariantViolation("coordinate count does not match the group rank");
  Int result = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    if (g.coords[k] < 0 || g.coords[k] >= moduli_[k]) throw InvariantViolation("coordinate out of range");
    result += g.coords[k] * strides_[k];
  }
  return static_cast<Elem>(result);
}

Elem AbelianPGroup::index_reduced(std::span<const Int> coords) const {
  if (coords.size() != moduli_.size()) throw InvariantViolation("coordinate count does not match the group rank");
  Int result = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    Int c = coords[k] % moduli_[k];
    if (c < 0) c += moduli_[k];
    result += c * strides_[k];
  }
  return static_cast<Elem>(result);
}

GroupElement scalar_mul(const AbelianPGroup& g, Int c, const GroupElement& a) {
  return g.element(g.scale(c, g.index(a)));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const AbelianPGroup& g) : group_(g), member_(g.size(), 0), elements_{0} { member_[0] = 1; }

Subgroup Subgroup::trivial(const AbelianPGroup& g) { return Subgroup(g); }

Subgroup Subgroup::whole(const AbelianPGroup& g) {
  SubgroupBuilder b(g);
  for (int i = 0; i < g.rank(); ++i) b.add(g.generator(i));
  return std::move(b).finish();
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem a) { return other.contains(a); });
}

SubgroupBuilder::SubgroupBuilder(const AbelianPGroup& g) : current_(g) {}

bool SubgroupBuilder::add(Elem g) {
  auto& s = current_;
  if (s.member_[g]) return false;
  const std::vector<Elem> base = s.elements_;
  Elem shift = g;
  while (!s.member_[shift]) {
    for (Elem h : base) {
      Elem e = s.group_.add(h, shift);
      s.member_[e] = 1;
      s.elements_.push_back(e);
    }
    shift = s.group_.add(shift, g);
  }
  s.generators_.push_back(g);
  return true;
}

Subgroup SubgroupBuilder::finish() && {
  std::sort(current_.elements_.begin(), current_.elements_.end());
  return std::move(current_);
}

Subgroup SubgroupBuilder::snapshot() const {
  Subgroup copy = current_;
  std::sort(copy.elements_.begin(), copy.elements_.end());
  return copy;
}

Subgroup subgroup_closure(const AbelianPGroup& g, std::span<const Elem> gens) {
  SubgroupBuilder b(g);
  for (Elem x : gens) {
    if (x >= g.size()) throw InvariantViolation("generator outside the group");
    b.add(x);
  }
  return std::move(b).finish();
}

Subgroup annihilator(const AbelianPGroup& g, int i) {
  Int power = 1;
  for (int k = 0; k < i && k < g.log_order(); ++k) power *= g.prime();
  SubgroupBuilder b(g);
  if (i >= g.log_order()) {
    for (int k = 0; k < g.rank(); ++k) b.add(g.generator(k));
  } else {
    for (Elem a = 0; a < g.size(); ++a)
      if (g.scale(power, a) == 0) b.add(a);
  }
  return std::move(b).finish();
}

Subgroup multiples(const Subgroup& s, int i) {
  const AbelianPGroup& g = s.group();
  Int power = 1;
  for (int k = 0; k < i && k < g.log_order(); ++k) power *= g.prime();
  if (i >= g.log_order()) power = 0;
  SubgroupBuilder b(g);
  for (Elem x : s.generators()) b.add(g.scale(power, x));
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------

EndoMap identity_map(const AbelianPGroup& g) {
  EndoMap f;
  for (int i = 0; i < g.rank(); ++i) f.images.push_back(g.generator(i));
  return f;
}

EndoMap scalar_map(const AbelianPGroup& g, Int c) {
  EndoMap f;
  for (int i = 0; i < g.rank(); ++i) f.images.push_back(g.scale(c, g.generator(i)));
  return f;
}

bool is_well_defined(const AbelianPGroup& g, const EndoMap& f) {
  if (f.images.size() != static_cast<std::size_t>(g.rank())) return false;
  for (int i = 0; i < g.rank(); ++i) {
    Elem img = f.images[static_cast<std::size_t>(i)];
    if (img >= g.size()) return false;
    if (g.scale(g.component_order(i), img) != 0) return false;
  }
  return true;
}

Elem apply(const AbelianPGroup& g, const EndoMap& f, Elem a) {
  Elem result = 0;
  for (int i = 0; i < g.rank(); ++i) {
    Int c = g.coordinate(a, i);
    if (c != 0) result = g.add(result, g.scale(c, f.images[static_cast<std::size_t>(i)]));
  }
  return result;
}

std::vector<Elem> tabulate(const AbelianPGroup& g, const EndoMap& f) {
  std::vector<Elem> table(g.size(), 0);
  // a = (a - last nonzero unit step) + unit step, filled in index order.
  for (Elem a = 1; a < g.size(); ++a) {
    int k = g.rank() - 1;
    while (g.coordinate(a, k) == 0) --k;
    Elem prev = g.sub(a, g.generator(k));
    table[a] = g.add(table[prev], f.images[static_cast<std::size_t>(k)]);
  }
  return table;
}

EndoMap compose(const AbelianPGroup& g, const EndoMap& f, const EndoMap& h) {
  EndoMap out;
  out.images.reserve(h.images.size());
  for (Elem x : h.images) out.images.push_back(apply(g, f, x));
  return out;
}

bool is_bijective(const AbelianPGroup& g, const EndoMap& f) {
  if (!is_well_defined(g, f)) return false;
  std::vector<char> hit(g.size(), 0);
  for (Elem y : tabulate(g, f)) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

EndoMap inverse(const AbelianPGroup& g, const EndoMap& f) {
  if (!is_well_defined(g, f)) throw NotAutomorphism("map does not respect generator orders");
  std::vector<Elem> table = tabulate(g, f);
  std::vector<Elem> inv(g.size(), 0);
  std::vector<char> hit(g.size(), 0);
  for (Elem a = 0; a < g.size(); ++a) {
    if (hit[table[a]]) throw NotAutomorphism("map is not bijective");
    hit[table[a]] = 1;
    inv[table[a]] = a;
  }
  return from_table(g, inv);
}

EndoMap from_table(const AbelianPGroup& g, std::span<const Elem> table) {
  if (table.size() != g.size()) throw InvariantViolation("table size does not match the group");
  EndoMap f;
  for (int i = 0; i < g.rank(); ++i) f.images.push_back(table[g.generator(i)]);
  return f;
}

namespace {

struct AutomorphismSearch {
  const AbelianPGroup& g;
  std::vector<std::vector<Elem>> candidates;
  std::vector<Elem> chosen;
  std::vector<EndoMap> out;

  // The image of <g_0..g_j> must have the same order as <g_0..g_j>.
  void extend(int level, const SubgroupBuilder& image, std::size_t expected) {
    if (level == g.rank()) {
      out.push_back(EndoMap{chosen});
      return;
    }
    const auto lvl = static_cast<std::size_t>(level);
    const std::size_t next_expected = expected * static_cast<std::size_t>(g.component_order(level));
    for (Elem c : candidates[lvl]) {
      if (image.contains(c)) continue;
      SubgroupBuilder grown = image;
      grown.add(c);
      if (grown.size() != next_expected) continue;
      chosen[lvl] = c;
      extend(level + 1, grown, next_expected);
    }
  }
};

}  // namespace

std::vector<EndoMap> enumerate_automorphisms(const AbelianPGroup& g, const EnumerationLimits& limits) {
  if (g.size() > limits.max_group_size)
    throw EnumerationBoundExceeded("group of order " + std::to_string(g.size()) + " exceeds the enumeration bound " +
                                   std::to_string(limits.max_group_size));
  AutomorphismSearch search{g, {}, std::vector<Elem>(static_cast<std::size_t>(g.rank()), 0), {}};
  long double space = 1;
  for (int i = 0; i < g.rank(); ++i) {
    std::vector<Elem> cands;
    for (Elem a = 0; a < g.size(); ++a)
      if (g.scale(g.component_order(i), a) == 0) cands.push_back(a);
    space *= static_cast<long double>(cands.size());
    search.candidates.push_back(std::move(cands));
  }
  if (space > static_cast<long double>(limits.max_candidates))
    throw EnumerationBoundExceeded("automorphism search space exceeds " + std::to_string(limits.max_candidates));
  search.extend(0, SubgroupBuilder(g), 1);
  return std::move(search.out);
}

}  // namespace bracelab
