#include <algorithm>

#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/workbench.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bracelab;

TEST_CASE("radical braces") {
  const Brace b = radical_brace(5, 2);
  CHECK(verify_brace(b).passed());
  CHECK(series(b, SeriesKind::strong).index == 3);
  CHECK(series(radical_brace(7, 2), SeriesKind::strong).index == 3);
  CHECK(series(radical_brace(11, 3), SeriesKind::strong).index == 4);
  CHECK_THROWS_AS(radical_brace(3, 2), HypothesisViolated);
  CHECK_THROWS_AS(radical_brace(5, 1), HypothesisViolated);
  CHECK_THROWS_AS(radical_brace(5, 4), HypothesisViolated);
}

TEST_CASE("catalog objects pass their own verifiers") {
  for (const auto& d : catalog()) {
    CAPTURE(d.name);
    if (d.kind() == DocumentKind::brace)
      CHECK(verify_brace(d.brace()).passed());
    else
      CHECK(verify_prelie(d.prelie()).passed());
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_prelie(AbelianPGroup::cyclic(5, 1), Nilpotency::strong).size() == 1);
  CHECK(enumerate_prelie(AbelianPGroup::cyclic(5, 1), Nilpotency::any).size() == 5);
  auto z25 = enumerate_prelie(AbelianPGroup::cyclic(5, 2), Nilpotency::strong);
  REQUIRE(z25.size() == 5);
  for (const auto& p : z25) CHECK(p.structure_constant(0, 0) % 5 == 0);
  CHECK(enumerate_prelie(AbelianPGroup(5, {}), Nilpotency::strong).size() == 1);
  CHECK(prelie_search_space(AbelianPGroup(5, {2, 1})) == 125ull * 25 * 25 * 25);
  CHECK_THROWS_AS(enumerate_prelie(AbelianPGroup(5, {1, 1, 1}), Nilpotency::any), EnumerationBoundExceeded);
  CHECK_THROWS_AS(enumerate_prelie(AbelianPGroup(5, {5}), Nilpotency::any), EnumerationBoundExceeded);
  // Two-dimensional nilpotent rings over F_5: zero, plus v.v = c u for a line u and c != 0.
  CHECK(enumerate_prelie(AbelianPGroup(5, {1, 1}), Nilpotency::strong).size() == 25);
}

TEST_CASE("enumerated rings give pairwise distinct groups of flows") {
  for (const auto& g : {AbelianPGroup::cyclic(5, 2), AbelianPGroup(5, {1, 1})}) {
    std::vector<Brace> braces;
    for (const auto& p : enumerate_prelie(g, Nilpotency::strong)) braces.push_back(flows_circle(p));
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < braces.size(); ++i) {
      bool fresh = true;
      for (std::size_t j = 0; j < i && fresh; ++j) fresh = !(braces[i] == braces[j]);
      distinct += fresh;
    }
    CHECK(distinct == braces.size());
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& d : catalog()) {
    CAPTURE(d.name);
    auto text = serialize(d);
    CHECK(deserialize(text) == d);
  }
  AlgebraDocument p5{scalar_prelie(5, 2, 5), "", ""};
  CHECK(serialize(p5).rfind("prelie p=5 n=2 inv=2\n", 0) == 0);
  CHECK(serialize(p5) == "prelie p=5 n=2 inv=2\nsc 0 0: 5\n");
  const AbelianPGroup g(5, {2, 1});
  AlgebraDocument m{PreLieRing(g, {0, g.scale(5, g.generator(0)), 0, 0}), "mixed", "hand made"};
  CHECK(serialize(m) ==
        "prelie p=5 n=3 inv=2,1\nname mixed\nprovenance hand made\nsc 0 0: 0,0\nsc 0 1: 5,0\n"
        "sc 1 0: 0,0\nsc 1 1: 0,0\n");
}

TEST_CASE("comments, blank lines and several documents") {
  const std::string text =
      "# two documents\n"
      "prelie p=5 n=2 inv=2   # header\n"
      "\n"
      "sc 0 0: 10\n"
      "prelie p=5 n=1 inv=1\n"
      "name z5\n"
      "sc 0 0: 0\n";
  auto docs = deserialize_all(text);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].prelie() == scalar_prelie(5, 2, 10));
  CHECK(docs[1].name == "z5");
  CHECK_THROWS_AS(deserialize(text), ParseError);
  CHECK(deserialize_all("").empty());
}

TEST_CASE("malformed input") {
  auto text = serialize({radical_brace(5, 2), "", ""});
  auto cut = text.substr(0, text.size() / 2);
  cut = cut.substr(0, cut.rfind('\n') + 1);
  try {
    deserialize(cut);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == static_cast<std::size_t>(std::count(cut.begin(), cut.end(), '\n')) + 2);
    CHECK(e.column() == 1);
  }
  try {
    deserialize("prelie p=5 n=2 inv=2\nsc 0 0 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(deserialize("ring p=5 n=2 inv=2\n"), ParseError);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=2\nsc 0 0: 5\n"), ParseError);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=2 inv=2\nsc 0 0: 5,1\n"), ParseError);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=2 inv=2\nsc 0 0: x\n"), ParseError);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=2 inv=2\nsc 0 0: 5\nsc 0 0: 5\n"), ParseError);
  CHECK_THROWS_AS(deserialize("brace p=5 n=1 inv=1\nrow 0: 0 1 2 3 4\nrow 2: 1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(deserialize("brace p=5 n=1 inv=1\nrow 0: 0 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=3 inv=2\nsc 0 0: 5\n"), InvariantViolation);
  CHECK_THROWS_AS(deserialize("prelie p=5 n=2 inv=2\nsc 0 0: 25\n"), InvariantViolation);
  CHECK_THROWS_AS(deserialize("brace p=5 n=1 inv=1\nrow 0: 0 1 2 3 9\n"), InvariantViolation);
}

TEST_CASE("suite") {
  CHECK(run_suite({}).targets.empty());
  CHECK(run_suite({}).passed());
  auto empty = nlohmann::json::parse(suite_json(run_suite({})));
  CHECK(empty["targets"].empty());

  AlgebraDocument b5{radical_brace(5, 2), "B5", ""};
  auto good = run_suite({b5});
  CHECK(good.passed());
  CHECK(good.targets[0].report.find("roundtrip_brace")->passed);
  CHECK(good.targets[0].report.find("star_expansion_residual")->detail == "exhaustive");

  std::vector<Elem> table(b5.brace().table().begin(), b5.brace().table().end());
  table[3 * 25 + 4] = (table[3 * 25 + 4] + 1) % 25;
  AlgebraDocument bad{Brace(b5.group(), table), "B5-corrupt", ""};
  auto r = run_suite({bad});
  CHECK_FALSE(r.passed());
  const Check* f = r.targets[0].report.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->witness.size() == 3);
  auto j = nlohmann::json::parse(suite_json(r));
  CHECK(j["passed"] == false);
  CHECK(j["targets"][0]["name"] == "B5-corrupt");
  bool has_witness = false;
  for (const auto& c : j["targets"][0]["checks"])
    if (c["passed"] == false && c["witness"].size() == 3) has_witness = true;
  CHECK(has_witness);
  CHECK(suite_text(r).find("FAIL B5-corrupt") != std::string::npos);

  auto p = run_suite({AlgebraDocument{scalar_prelie(5, 2, 5), "P5", ""}});
  CHECK(p.passed());
  CHECK(p.targets[0].report.find("roundtrip_prelie")->passed);
  CHECK(p.targets[0].report.find("bch_homomorphism")->passed);
}
