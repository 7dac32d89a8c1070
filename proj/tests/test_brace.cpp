#include "bracelab/brace.hpp"
#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/workbench.hpp"
#include "doctest.h"

using namespace bracelab;

namespace {

Brace affine_brace(Int p, int n, Int c) {
  const AbelianPGroup g = AbelianPGroup::cyclic(p, n);
  const auto m = static_cast<Int>(g.size());
  return Brace::from_function(g, [=](Elem a, Elem b) { return static_cast<Elem>((a + b + c * a * b) % m); });
}

}  // namespace

TEST_CASE("radical brace on Z/25") {
  const Brace b = affine_brace(5, 2, 5);
  CHECK(b == radical_brace(5, 2));
  auto r = verify_brace(b);
  CHECK(r.passed());
  CHECK(r.find("associativity")->detail == "exhaustive");
  CHECK(b.circle(1, 1) == 7);
  CHECK(star(b, 1, 1) == 5);
  CHECK(star(b, 5, 5) == 0);
  CHECK(b.lambda(1, 1) == 6);
  CHECK(lambda_map(b, 2).images == std::vector<Elem>{11});
  CHECK(circle_power(b, 1, 5) == 5);
  CHECK(circle_power(b, 3, 0) == 0);
  for (Elem a = 0; a < 25; ++a) CHECK(b.circle(a, circle_inverse(b, a)) == 0);
}

TEST_CASE("verification failures carry witnesses") {
  Brace good = radical_brace(5, 2);
  std::vector<Elem> table(good.table().begin(), good.table().end());
  table[1 * 25 + 1] = 8;
  const Brace bad(good.group(), table);
  auto r = verify_brace(bad);
  CHECK_FALSE(r.passed());
  const Check* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->name == "compatibility");
  REQUIRE(f->witness.size() == 3);
  Elem a = f->witness[0], x = f->witness[1], y = f->witness[2];
  const AbelianPGroup& g = bad.group();
  CHECK(g.add(bad.circle(a, g.add(x, y)), a) != g.add(bad.circle(a, x), bad.circle(a, y)));

  // a o b = a + b + ab on Z/25 has no inverse for 24.
  auto r2 = verify_brace(affine_brace(5, 2, 1));
  const Check* inv = r2.find("inverses");
  CHECK_FALSE(inv->passed);
  REQUIRE(inv->witness.size() == 1);
  const Elem lonely = inv->witness[0];
  CHECK(lonely % 5 == 4);
  for (Elem b = 0; b < 25; ++b) CHECK(affine_brace(5, 2, 1).circle(lonely, b) != 0);

  CHECK_THROWS_AS(Brace(g, std::vector<Elem>(10, 0)), InvariantViolation);
  CHECK_THROWS_AS(Brace(g, std::vector<Elem>(625, 25)), InvariantViolation);
}

TEST_CASE("associativity above the exhaustive cap") {
  VerifyOptions opt;
  opt.max_exhaustive = 10;
  auto r = verify_brace(radical_brace(5, 2), opt);
  CHECK(r.passed());
  CHECK(r.find("associativity")->detail == "via lambda homomorphism");

  // Break compatibility and associativity together: the sampled path runs and finds a witness.
  const AbelianPGroup g = AbelianPGroup::cyclic(5, 2);
  Brace odd = Brace::from_function(g, [&](Elem a, Elem b) { return static_cast<Elem>((a + b + 5 * a * b * b) % 25); });
  auto r2 = verify_brace(odd, opt);
  const Check* as = r2.find("associativity");
  CHECK_FALSE(as->passed);
  REQUIRE(as->witness.size() == 3);
  const Elem a = as->witness[0], b = as->witness[1], c = as->witness[2];
  CHECK(odd.circle(odd.circle(a, b), c) != odd.circle(a, odd.circle(b, c)));
}

TEST_CASE("series of radical braces") {
  for (auto kind : {SeriesKind::left, SeriesKind::right, SeriesKind::strong}) {
    auto s = series(radical_brace(5, 2), kind);
    REQUIRE(s.nilpotent());
    CHECK(*s.index == 3);
    CHECK(s.term(2).elements() == std::vector<Elem>{0, 5, 10, 15, 20});
    CHECK(series(Brace::trivial(AbelianPGroup::cyclic(5, 2)), kind).index == 2);
  }
  CHECK(series(radical_brace(7, 3), SeriesKind::strong).index == 4);
  // a o b = a + b + 5ab on Z/5^4: strong index 5.
  CHECK(series(affine_brace(5, 4, 5), SeriesKind::strong).index == 5);
}

TEST_CASE("star expansion residual") {
  const Brace b = radical_brace(5, 2);
  for (Elem x = 0; x < 25; ++x)
    for (Elem y = 0; y < 25; ++y)
      for (Elem z = 0; z < 25; z += 3) CHECK(star_expansion_residual(b, x, y, z) == 0);
  const Brace h = flows_circle(filiform_prelie(7, 3));
  const int k = *series(h, SeriesKind::strong).index;
  const AbelianPGroup& g = h.group();
  // * is not right distributive here, so the correction terms carry real content.
  int not_distributive = 0;
  for (Elem x = 0; x < h.size(); x += 3)
    for (Elem y = 0; y < h.size(); y += 5)
      for (Elem z = 0; z < h.size(); z += 7) {
        CHECK(star_expansion_residual(h, x, y, z, k) == 0);
        CHECK(star_expansion_residual(h, x, y, z, 0) == 0);
        if (g.sub(g.sub(h.star(g.add(x, y), z), h.star(x, z)), h.star(y, z)) != 0) ++not_distributive;
      }
  CHECK(not_distributive > 0);
}

TEST_CASE("circle subgroups and powers") {
  const Brace b = radical_brace(5, 2);
  for (int i = 0; i <= 2; ++i) {
    auto f = frobenius_subgroups(b, i);
    CHECK(f.equal);
    CHECK(f.powers == f.multiples);
  }
  CHECK(frobenius_subgroups(b, 1).multiples.elements() == std::vector<Elem>{0, 5, 10, 15, 20});
  std::vector<Elem> gens{5};
  CHECK(circle_subgroup(b, gens) == std::vector<Elem>{0, 5, 10, 15, 20});
  CHECK_THROWS_AS(frobenius_subgroups(affine_brace(5, 4, 5), 1), HypothesisViolated);
  const Brace big = affine_brace(5, 4, 5);
  for (int i = 0; i <= 4; ++i)
    for (Elem x = 0; x < big.size(); x += 11)
      for (Elem y = 0; y < big.size(); y += 13) CHECK(power_star_residual(big, x, y, i) == 0);
}

TEST_CASE("ideals") {
  const Brace b = radical_brace(5, 2);
  for (int i = 0; i <= 2; ++i) CHECK(ideal_check(b, annihilator(b.group(), i)));
  const Brace h = flows_circle(filiform_prelie(7, 3));
  const AbelianPGroup& g = h.group();
  std::vector<Elem> e2{g.generator(1)};
  CHECK_FALSE(ideal_check(h, subgroup_closure(g, e2)));
  std::vector<Elem> e3{g.generator(2)};
  CHECK(ideal_check(h, subgroup_closure(g, e3)));
}
