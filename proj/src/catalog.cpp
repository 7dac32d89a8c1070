#include <string>

#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/workbench.hpp"

namespace bracelab {

Brace radical_brace(Int p, int n) {
  if (n < 2) throw HypothesisViolated("radical brace needs n >= 2");
  if (n + 1 >= p)
    throw HypothesisViolated("radical brace on Z/" + std::to_string(p) + "^" + std::to_string(n) +
                             " has strong index n + 1 = " + std::to_string(n + 1) + ", which is not below p");
  const AbelianPGroup g = AbelianPGroup::cyclic(p, n);
  const Modulus m = g.modulus();
  const Residue pr = m.reduce(p);
  Brace b = Brace::from_function(g, [&](Elem a, Elem c) {
    Residue ra{a}, rc{c};
    return static_cast<Elem>(m.add(m.add(ra, rc), m.mul(pr, m.mul(ra, rc))).value);
  });
  auto strong = series(b, SeriesKind::strong);
  if (!verify_brace(b).passed() || strong.index != n + 1)
    throw InvariantViolation("radical brace failed its own checks");
  return b;
}

PreLieRing scalar_prelie(Int p, int n, Int t) {
  const AbelianPGroup g = AbelianPGroup::cyclic(p, n);
  return PreLieRing(g, {g.scale(t, 1)});
}

PreLieRing filiform_prelie(Int p, int r) {
  if (r < 1) throw InvariantViolation("filiform ring needs rank >= 1");
  const AbelianPGroup g(p, std::vector<int>(static_cast<std::size_t>(r), 1));
  std::vector<Elem> sc(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i + 1 < r; ++i) sc[static_cast<std::size_t>(i)] = g.generator(i + 1);
  return PreLieRing(g, std::move(sc));
}

const AbelianPGroup& AlgebraDocument::group() const {
  return payload.index() == 0 ? std::get<Brace>(payload).group() : std::get<PreLieRing>(payload).group();
}

std::vector<AlgebraDocument> catalog() {
  std::vector<AlgebraDocument> out;
  auto add_brace = [&](Brace b, std::string name, std::string prov) {
    out.push_back({std::move(b), std::move(name), std::move(prov)});
  };
  auto add_prelie = [&](PreLieRing p, std::string name, std::string prov) {
    out.push_back({std::move(p), std::move(name), std::move(prov)});
  };

  for (auto [p, n] : {std::pair<Int, int>{5, 2}, {7, 2}, {7, 3}, {11, 2}, {13, 2}})
    add_brace(radical_brace(p, n), "radical-" + std::to_string(p) + "-" + std::to_string(n), "a o b = a + b + p a b");
  add_brace(Brace::trivial(AbelianPGroup::cyclic(5, 2)), "trivial-Z25", "a o b = a + b");
  add_brace(Brace::trivial(AbelianPGroup(5, {1, 1})), "trivial-Z5xZ5", "a o b = a + b");

  const AbelianPGroup z125(5, {1, 1, 1});
  PreLieRing heis(z125, {0, z125.generator(2), 0, 0, 0, 0, 0, 0, 0});
  add_prelie(PreLieRing::zero(AbelianPGroup::cyclic(5, 2)), "zero-Z25", "a . b = 0");
  add_prelie(scalar_prelie(5, 2, 5), "scalar-5-2-5", "a . b = 5ab");
  add_prelie(scalar_prelie(5, 2, 10), "scalar-5-2-10", "a . b = 10ab");
  add_prelie(scalar_prelie(7, 2, 7), "scalar-7-2-7", "a . b = 7ab");
  add_prelie(heis, "heisenberg-5", "e1 . e2 = e3 on (Z/5)^3");
  add_prelie(filiform_prelie(7, 3), "filiform-7-3", "e1 . e_i = e_{i+1} on (Z/7)^3");
  add_prelie(filiform_prelie(7, 4), "filiform-7-4", "e1 . e_i = e_{i+1} on (Z/7)^4");

  add_brace(flows_circle(heis), "flows-heisenberg-5", "group of flows of heisenberg-5");
  add_brace(flows_circle(filiform_prelie(7, 3)), "flows-filiform-7-3", "group of flows of filiform-7-3");
  return out;
}

}  // namespace bracelab
