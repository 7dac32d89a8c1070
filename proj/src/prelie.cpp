#include "bracelab/prelie.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bracelab/errors.hpp"

namespace bracelab {

namespace {

// Full product tables are kept while they stay under 2^23 entries.
constexpr std::size_t kTableEntries = std::size_t{1} << 23;

Int saturating_mul(Int a, Int b) {
  if (a != 0 && b > std::numeric_limits<Int>::max() / a) return std::numeric_limits<Int>::max();
  return a * b;
}

}  // namespace

PreLieRing::PreLieRing(AbelianPGroup group, std::vector<Elem> structure_constants)
    : group_(std::move(group)), sc_(std::move(structure_constants)) {
  const auto r = static_cast<std::size_t>(group_.rank());
  if (sc_.size() != r * r)
    throw InvariantViolation("expected " + std::to_string(r * r) + " structure constants, got " +
                             std::to_string(sc_.size()));
  for (Elem e : sc_)
    if (e >= group_.size())
      throw InvariantViolation("structure constant " + std::to_string(e) + " is outside the group");
  if (group_.size() * group_.size() <= kTableEntries) {
    // Each nonzero index x is x' + g_k for k its last nonzero coordinate, with
    // x' = x - g_k found by plain index subtraction; build rows by that recursion.
    const std::size_t n = group_.size();
    const int r = group_.rank();
    std::vector<int> last(n, -1);
    for (Elem x = 1; x < n; ++x) {
      int k = r - 1;
      while (group_.coordinate(x, k) == 0) --k;
      last[x] = k;
    }
    std::vector<Elem> gen_rows(static_cast<std::size_t>(r) * n, 0);
    for (int i = 0; i < r; ++i) {
      Elem* row = gen_rows.data() + static_cast<std::size_t>(i) * n;
      for (Elem b = 1; b < n; ++b)
        row[b] = group_.add(row[b - group_.generator(last[b])], structure_constant(i, last[b]));
    }
    table_.assign(n * n, 0);
    for (Elem a = 1; a < n; ++a) {
      const int k = last[a];
      const Elem* prev = table_.data() + static_cast<std::size_t>(a - group_.generator(k)) * n;
      const Elem* gen = gen_rows.data() + static_cast<std::size_t>(k) * n;
      Elem* row = table_.data() + static_cast<std::size_t>(a) * n;
      for (Elem b = 0; b < n; ++b) row[b] = group_.add(prev[b], gen[b]);
    }
  }
}

PreLieRing PreLieRing::zero(const AbelianPGroup& g) {
  return PreLieRing(g, std::vector<Elem>(static_cast<std::size_t>(g.rank() * g.rank()), 0));
}

PreLieRing PreLieRing::from_product(const AbelianPGroup& g, const std::function<Elem(Elem, Elem)>& product) {
  std::vector<Elem> sc;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j) sc.push_back(product(g.generator(i), g.generator(j)));
  return PreLieRing(g, std::move(sc));
}

Elem PreLieRing::compute_dot(Elem a, Elem b) const noexcept {
  const int r = group_.rank();
  Elem out = 0;
  for (int i = 0; i < r; ++i) {
    Int ai = group_.coordinate(a, i);
    if (ai == 0) continue;
    Elem row = 0;
    for (int j = 0; j < r; ++j) {
      Int bj = group_.coordinate(b, j);
      if (bj != 0) row = group_.add(row, group_.scale(bj, structure_constant(i, j)));
    }
    out = group_.add(out, group_.scale(ai, row));
  }
  return out;
}

Elem PreLieRing::dot(Elem a, Elem b) const noexcept {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * group_.size() + b];
  return compute_dot(a, b);
}

VerificationReport verify_prelie(const PreLieRing& p, bool all_triples) {
  const AbelianPGroup& g = p.group();
  VerificationReport report;

  Check defined{"well_defined", true, {}, ""};
  for (int i = 0; i < g.rank() && defined.passed; ++i)
    for (int j = 0; j < g.rank(); ++j) {
      Int bound = std::min(g.component_order(i), g.component_order(j));
      Elem c = p.structure_constant(i, j);
      if (bound % g.order(c) != 0) {
        defined = Check{"well_defined",
                        false,
                        {g.generator(i), g.generator(j)},
                        "order of g_i . g_j does not divide the orders of g_i and g_j"};
        break;
      }
    }
  report.checks.push_back(defined);

  auto assoc = [&](Elem x, Elem y, Elem z) { return g.sub(p.dot(p.dot(x, y), z), p.dot(x, p.dot(y, z))); };
  auto symmetric = [&](Elem x, Elem y, Elem z) { return assoc(x, y, z) == assoc(y, x, z); };

  Check sym{"left_symmetry", true, {}, "generator triples"};
  for (int i = 0; i < g.rank() && sym.passed; ++i)
    for (int j = 0; j < g.rank() && sym.passed; ++j)
      for (int k = 0; k < g.rank(); ++k) {
        Elem x = g.generator(i), y = g.generator(j), z = g.generator(k);
        if (!symmetric(x, y, z)) {
          sym = Check{"left_symmetry", false, {x, y, z}, "(x.y).z - x.(y.z) != (y.x).z - y.(x.z)"};
          break;
        }
      }
  report.checks.push_back(sym);

  if (all_triples) {
    Check full{"left_symmetry_all_triples", true, {}, ""};
    const Elem n = static_cast<Elem>(g.size());
    for (Elem x = 0; x < n && full.passed; ++x)
      for (Elem y = 0; y < n && full.passed; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!symmetric(x, y, z)) {
            full = Check{"left_symmetry_all_triples", false, {x, y, z}, "(x.y).z - x.(y.z) != (y.x).z - y.(x.z)"};
            break;
          }
    report.checks.push_back(full);
  }
  return report;
}

Elem dot(const PreLieRing& p, Elem a, Elem b) { return p.dot(a, b); }

SeriesReport prelie_series(const PreLieRing& p, SeriesKind kind) {
  switch (kind) {
    case SeriesKind::solvable:
      return solvable_series(p);
    case SeriesKind::lie_lower_central:
      return lie_lower_central_series(p);
    default:
      return detail::build_series(p.group(), kind, true, [&](Elem x, Elem y) { return p.dot(x, y); });
  }
}

Subgroup socle(const PreLieRing& p) {
  const AbelianPGroup& g = p.group();
  SubgroupBuilder b(g);
  for (Elem a = 0; a < g.size(); ++a) {
    if (b.contains(a)) continue;
    bool kills = true;
    for (int j = 0; j < g.rank() && kills; ++j) kills = p.dot(a, g.generator(j)) == 0;
    if (kills) b.add(a);
  }
  return std::move(b).finish();
}

bool prelie_ideal_check(const PreLieRing& p, const Subgroup& s) {
  const AbelianPGroup& g = p.group();
  for (Elem x : s.generators())
    for (int j = 0; j < g.rank(); ++j) {
      Elem a = g.generator(j);
      if (!s.contains(p.dot(x, a)) || !s.contains(p.dot(a, x))) return false;
    }
  return true;
}

Subgroup product_ideal(const PreLieRing& p, const Subgroup& ideal) {
  if (!prelie_ideal_check(p, ideal)) throw NotAnIdeal("subgroup is not closed under multiplication by A");
  const AbelianPGroup& g = p.group();
  SubgroupBuilder b(g);
  for (Elem x : ideal.generators())
    for (int j = 0; j < g.rank(); ++j) b.add(p.dot(x, g.generator(j)));
  return std::move(b).finish();
}

SeriesReport solvable_series(const PreLieRing& p) {
  const AbelianPGroup& g = p.group();
  SeriesReport report;
  report.kind = SeriesKind::solvable;
  report.chain.push_back(Subgroup::whole(g));
  while (!report.chain.back().is_trivial()) {
    const Subgroup& last = report.chain.back();
    SubgroupBuilder b(g);
    for (Elem x : last.generators())
      for (Elem y : last.generators()) b.add(p.dot(x, y));
    Subgroup next = std::move(b).finish();
    if (next == last) return report;
    report.chain.push_back(std::move(next));
  }
  report.index = static_cast<int>(report.chain.size());
  return report;
}

Elem lie_bracket(const PreLieRing& p, Elem a, Elem b) { return p.group().sub(p.dot(a, b), p.dot(b, a)); }

SeriesReport lie_lower_central_series(const PreLieRing& p) {
  const AbelianPGroup& g = p.group();
  SeriesReport report;
  report.kind = SeriesKind::lie_lower_central;
  report.chain.push_back(Subgroup::whole(g));
  while (!report.chain.back().is_trivial()) {
    const Subgroup& last = report.chain.back();
    SubgroupBuilder b(g);
    for (Elem x : last.generators())
      for (int j = 0; j < g.rank(); ++j) b.add(lie_bracket(p, x, g.generator(j)));
    Subgroup next = std::move(b).finish();
    if (next == last) return report;
    report.chain.push_back(std::move(next));
  }
  report.index = static_cast<int>(report.chain.size());
  return report;
}

DorrohRing::DorrohRing(PreLieRing base) : base_(std::move(base)), modulus_(base_.group().modulus().value()) {}

DorrohRing::Element DorrohRing::add(const Element& x, const Element& y) const noexcept {
  return {base_.group().add(x.r, y.r), (x.m + y.m) % modulus_};
}

DorrohRing::Element DorrohRing::mul(const Element& x, const Element& y) const noexcept {
  const AbelianPGroup& g = base_.group();
  Elem r = g.add(g.add(base_.dot(x.r, y.r), g.scale(x.m, y.r)), g.scale(y.m, x.r));
  auto m = static_cast<Int>((static_cast<__int128>(x.m) * y.m) % modulus_);
  return {r, m};
}

bool DorrohRing::verify_identity() const {
  const Element e = one();
  for (Elem r = 0; r < base_.group().size(); ++r)
    for (Int m = 0; m < modulus_; ++m) {
      Element x{r, m};
      if (!(mul(e, x) == x) || !(mul(x, e) == x)) return false;
    }
  return true;
}

DorrohRing dorroh_extend(const PreLieRing& p) { return DorrohRing(p); }

Int strong_recursion_bound(int right_index, int left_index) {
  Int s = 2;
  for (int step = 2; step < right_index; ++step) s = saturating_mul(s, static_cast<Int>(left_index) + 1);
  return s;
}

StrongBoundReport strong_bound_check(const PreLieRing& p) {
  auto left = prelie_series(p, SeriesKind::left);
  auto right = prelie_series(p, SeriesKind::right);
  if (!left.nilpotent()) throw NotNilpotent("left series does not reach 0");
  if (!right.nilpotent()) throw NotNilpotent("right series does not reach 0");
  auto strong = prelie_series(p, SeriesKind::strong);

  StrongBoundReport out;
  out.left_index = *left.index;
  out.right_index = *right.index;
  out.recursion_bound = strong_recursion_bound(out.right_index, out.left_index);
  const int n = p.group().log_order();
  out.order_bound = 1;
  for (int i = 0; i <= n; ++i) out.order_bound = saturating_mul(out.order_bound, n + 1);
  if (strong.nilpotent()) {
    out.strong_index = *strong.index;
    out.within_recursion = out.strong_index <= out.recursion_bound;
    out.within_order_bound = out.strong_index <= out.order_bound;
  }
  return out;
}

PreLieRing scale_prelie(const PreLieRing& p, Int alpha) {
  const AbelianPGroup& g = p.group();
  std::vector<Elem> sc(p.structure_constants().begin(), p.structure_constants().end());
  for (Elem& c : sc) c = g.scale(alpha, c);
  return PreLieRing(g, std::move(sc));
}

}  // namespace bracelab
