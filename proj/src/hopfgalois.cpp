#include "bracelab/hopfgalois.hpp"

#include <set>

#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"

namespace bracelab {

HolomorphElement compose(const AbelianPGroup& g, const HolomorphElement& x, const HolomorphElement& y) {
  return {g.add(x.translation, apply(g, x.automorphism, y.translation)), compose(g, x.automorphism, y.automorphism)};
}

VerificationReport verify_regular_subgroup(const AbelianPGroup& g, const RegularSubgroup& s) {
  VerificationReport report;
  Check shape{"regular", true, {}, ""};
  if (s.elements.size() != g.size()) {
    shape = {"regular", false, {}, "expected one element per translation"};
  } else {
    for (Elem a = 0; a < g.size(); ++a) {
      const auto& e = s.elements[a];
      if (e.translation != a || !is_bijective(g, e.automorphism)) {
        shape = {"regular", false, {a}, "element has wrong translation or a singular linear part"};
        break;
      }
    }
  }
  report.checks.push_back(shape);
  if (!shape.passed) return report;

  Check closed{"closure", true, {}, ""};
  for (Elem a = 0; a < g.size() && closed.passed; ++a)
    for (Elem b = 0; b < g.size(); ++b) {
      auto c = compose(g, s.elements[a], s.elements[b]);
      if (!(s.elements[c.translation] == c)) {
        closed = {"closure", false, {a, b}, "product leaves the subset"};
        break;
      }
    }
  report.checks.push_back(closed);
  return report;
}

std::vector<EndoMap> prelie_automorphisms(const PreLieRing& p, const EnumerationLimits& limits) {
  const AbelianPGroup& g = p.group();
  std::vector<EndoMap> out;
  for (auto& f : enumerate_automorphisms(g, limits)) {
    bool keeps = true;
    for (int i = 0; i < g.rank() && keeps; ++i)
      for (int j = 0; j < g.rank() && keeps; ++j)
        keeps = apply(g, f, p.structure_constant(i, j)) ==
                p.dot(f.images[static_cast<std::size_t>(i)], f.images[static_cast<std::size_t>(j)]);
    if (keeps) out.push_back(std::move(f));
  }
  return out;
}

std::vector<EndoMap> coset_representatives(const PreLieRing& p, const EnumerationLimits& limits) {
  const AbelianPGroup& g = p.group();
  auto all = enumerate_automorphisms(g, limits);  // ascending
  auto stabilizer = prelie_automorphisms(p, limits);
  std::set<EndoMap> seen;
  std::vector<EndoMap> reps;
  for (const auto& f : all) {
    if (seen.count(f)) continue;
    reps.push_back(f);
    for (const auto& h : stabilizer) seen.insert(compose(g, h, f));
  }
  return reps;
}

PreLieRing twist(const PreLieRing& p, const EndoMap& f) {
  const AbelianPGroup& g = p.group();
  if (!is_well_defined(g, f)) throw NotAutomorphism("map does not respect generator orders");
  EndoMap inv = inverse(g, f);
  std::vector<Elem> sc;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j)
      sc.push_back(apply(g, inv, p.dot(f.images[static_cast<std::size_t>(i)], f.images[static_cast<std::size_t>(j)])));
  return PreLieRing(g, std::move(sc));
}

RegularSubgroup regular_subgroup(const Brace& b) {
  const AbelianPGroup& g = b.group();
  RegularSubgroup s;
  s.elements.reserve(g.size());
  for (Elem a = 0; a < g.size(); ++a) s.elements.push_back({a, lambda_map(b, a)});
  auto report = verify_regular_subgroup(g, s);
  if (!report.passed())
    throw InvariantViolation("lambda maps do not form a regular subgroup: " + report.first_failure()->detail);
  return s;
}

std::vector<RegularSubgroup> hopf_galois_structures(const PreLieRing& p, const EnumerationLimits& limits) {
  std::vector<RegularSubgroup> out;
  for (const auto& f : coset_representatives(p, limits)) out.push_back(regular_subgroup(flows_circle(twist(p, f))));
  return out;
}

bool pairwise_distinct(const std::vector<RegularSubgroup>& subgroups) {
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (std::size_t j = i + 1; j < subgroups.size(); ++j)
      if (subgroups[i] == subgroups[j]) return false;
  return true;
}

std::vector<Brace> not_right_nilpotent(const std::vector<Brace>& braces) {
  std::vector<Brace> out;
  for (const auto& b : braces)
    if (!series(b, SeriesKind::right).nilpotent()) out.push_back(b);
  return out;
}

}  // namespace bracelab
