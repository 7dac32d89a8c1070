#include <algorithm>
#include <limits>
#include <string>

#include "bracelab/errors.hpp"
#include "bracelab/workbench.hpp"

namespace bracelab {

namespace {

std::vector<std::vector<Elem>> admissible_values(const AbelianPGroup& g) {
  // g_i . g_j must be killed by both p^{e_i} and p^{e_j}.
  std::vector<std::vector<Elem>> out;
  for (int i = 0; i < g.rank(); ++i)
    for (int j = 0; j < g.rank(); ++j)
      out.push_back(annihilator(g, std::min(g.invariants()[static_cast<std::size_t>(i)],
                                            g.invariants()[static_cast<std::size_t>(j)]))
                        .elements());
  return out;
}

// c . g_k and g_i . c straight from structure constants, without building a ring.
Elem dot_generator_right(const AbelianPGroup& g, const std::vector<Elem>& sc, Elem c, int k) {
  const int r = g.rank();
  Elem out = 0;
  for (int a = 0; a < r; ++a)
    if (Int ca = g.coordinate(c, a)) out = g.add(out, g.scale(ca, sc[static_cast<std::size_t>(a * r + k)]));
  return out;
}

Elem dot_generator_left(const AbelianPGroup& g, const std::vector<Elem>& sc, int i, Elem c) {
  const int r = g.rank();
  Elem out = 0;
  for (int b = 0; b < r; ++b)
    if (Int cb = g.coordinate(c, b)) out = g.add(out, g.scale(cb, sc[static_cast<std::size_t>(i * r + b)]));
  return out;
}

bool left_symmetric_on_generators(const AbelianPGroup& g, const std::vector<Elem>& sc) {
  const int r = g.rank();
  auto assoc = [&](int i, int j, int k) {
    Elem lhs = dot_generator_right(g, sc, sc[static_cast<std::size_t>(i * r + j)], k);
    Elem rhs = dot_generator_left(g, sc, i, sc[static_cast<std::size_t>(j * r + k)]);
    return g.sub(lhs, rhs);
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (assoc(i, j, k) != assoc(j, i, k)) return false;
  return true;
}

}  // namespace

std::uint64_t prelie_search_space(const AbelianPGroup& g) {
  std::uint64_t total = 1;
  for (const auto& values : admissible_values(g)) {
    if (total > std::numeric_limits<std::uint64_t>::max() / values.size())
      return std::numeric_limits<std::uint64_t>::max();
    total *= values.size();
  }
  return total;
}

std::vector<PreLieRing> enumerate_prelie(const AbelianPGroup& g, Nilpotency require, const EnumerationLimits& limits) {
  if (g.size() > limits.max_group_size)
    throw EnumerationBoundExceeded("group of order " + std::to_string(g.size()) + " exceeds the enumeration bound " +
                                   std::to_string(limits.max_group_size));
  const std::uint64_t space = prelie_search_space(g);
  if (space > limits.max_candidates)
    throw EnumerationBoundExceeded("search space of " + std::to_string(space) + " candidates exceeds the bound " +
                                   std::to_string(limits.max_candidates));

  const auto values = admissible_values(g);
  std::vector<std::size_t> digit(values.size(), 0);
  std::vector<Elem> sc(values.size(), 0);
  std::vector<PreLieRing> out;
  while (true) {
    for (std::size_t t = 0; t < values.size(); ++t) sc[t] = values[t][digit[t]];
    if (left_symmetric_on_generators(g, sc)) {
      PreLieRing p(g, sc);
      bool keep = true;
      if (require != Nilpotency::any) keep = prelie_series(p, SeriesKind::left).nilpotent();
      if (keep && require == Nilpotency::strong) keep = prelie_series(p, SeriesKind::right).nilpotent();
      if (keep) out.push_back(std::move(p));
    }
    std::size_t t = 0;
    while (t < digit.size() && ++digit[t] == values[t].size()) digit[t++] = 0;
    if (t == digit.size()) break;
  }
  return out;
}

}  // namespace bracelab
