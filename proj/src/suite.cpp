#include <random>
#include <sstream>
#include <string>

#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/hopfgalois.hpp"
#include "bracelab/workbench.hpp"
#include "json.hpp"

namespace bracelab {

namespace {

Check info(std::string name, std::string detail) { return Check{std::move(name), true, {}, std::move(detail)}; }

Check skipped(std::string name, const std::string& why) { return info(std::move(name), "skipped: " + why); }

std::string index_text(const SeriesReport& s) {
  return s.nilpotent() ? "index " + std::to_string(*s.index) : "not nilpotent";
}

bool small_depth(const AbelianPGroup& g, const std::optional<int>& k) {
  return k && *k < g.prime() && g.log_order() + 1 < g.prime();
}

/// Visits triples exhaustively when there are at most `limit`, otherwise a
/// deterministic sample. Stops at the first failure and returns its witness.
template <typename Pred>
Check for_triples(std::string name, std::size_t n, const SuiteOptions& opt, Pred ok) {
  const auto total = static_cast<std::uint64_t>(n) * n * n;
  if (total <= opt.max_triples) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!ok(a, b, c)) return Check{std::move(name), false, {a, b, c}, "exhaustive"};
    return info(std::move(name), "exhaustive");
  }
  std::mt19937_64 rng(opt.verify.seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t s = 0; s < opt.verify.samples; ++s) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (!ok(a, b, c)) return Check{std::move(name), false, {a, b, c}, "sampled"};
  }
  return info(std::move(name), "sampled");
}

void brace_checks(const Brace& b, const SuiteOptions& opt, VerificationReport& out) {
  const AbelianPGroup& g = b.group();
  auto base = verify_brace(b, opt.verify);
  out.checks.insert(out.checks.end(), base.checks.begin(), base.checks.end());
  if (!base.passed()) return;

  auto left = series(b, SeriesKind::left);
  auto right = series(b, SeriesKind::right);
  auto strong = series(b, SeriesKind::strong);
  out.checks.push_back(info("series_left", index_text(left)));
  out.checks.push_back(info("series_right", index_text(right)));
  out.checks.push_back(info("series_strong", index_text(strong)));

  {
    auto reg = verify_regular_subgroup(g, RegularSubgroup{[&] {
                                         std::vector<HolomorphElement> e;
                                         for (Elem a = 0; a < g.size(); ++a) e.push_back({a, lambda_map(b, a)});
                                         return e;
                                       }()});
    const Check* bad = reg.first_failure();
    out.checks.push_back(bad ? Check{"regular_subgroup", false, bad->witness, bad->detail}
                             : info("regular_subgroup", ""));
  }

  if (strong.nilpotent()) {
    const int k = *strong.index;
    out.checks.push_back(for_triples("star_expansion_residual", g.size(), opt, [&](Elem x, Elem y, Elem z) {
      return star_expansion_residual(b, x, y, z, k) == 0;
    }));
  } else {
    out.checks.push_back(skipped("star_expansion_residual", "not strongly nilpotent"));
  }

  {
    Check c = info("power_star_residual", "all pairs, 0 <= i <= n");
    for (int i = 0; i <= g.log_order() && c.passed; ++i)
      for (Elem x = 0; x < g.size() && c.passed; ++x)
        for (Elem y = 0; y < g.size(); ++y)
          if (power_star_residual(b, x, y, i) != 0) {
            c = Check{"power_star_residual", false, {x, y, static_cast<Elem>(i)}, "nonzero residual at (a, b, i)"};
            break;
          }
    out.checks.push_back(c);
  }

  if (g.prime() > g.log_order() + 1) {
    Check pw = info("circle_powers_are_multiples", "0 <= i <= n");
    Check ann = info("annihilators_are_ideals", "0 <= i <= n");
    for (int i = 0; i <= g.log_order(); ++i) {
      if (pw.passed && !frobenius_subgroups(b, i).equal)
        pw = Check{"circle_powers_are_multiples", false, {static_cast<Elem>(i)}, "o-powers differ from p^i A"};
      if (ann.passed && !ideal_check(b, annihilator(g, i)))
        ann = Check{"annihilators_are_ideals", false, {static_cast<Elem>(i)}, "ann(p^i) is not an ideal"};
    }
    out.checks.push_back(pw);
    out.checks.push_back(ann);
  } else {
    out.checks.push_back(skipped("circle_powers_are_multiples", "needs p > n + 1"));
  }

  if (small_depth(g, strong.index)) {
    PreLieRing p = brace_to_prelie(b);
    auto pv = verify_prelie(p);
    out.checks.push_back(
        pv.passed() ? info("associated_prelie", "")
                    : Check{"associated_prelie", false, pv.first_failure()->witness, pv.first_failure()->detail});
    auto ps = prelie_series(p, SeriesKind::strong);
    out.checks.push_back(Check{"index_preserved", ps.index == strong.index, {}, "pre-Lie " + index_text(ps)});
    Brace back = flows_circle(p);
    Check rt = info("roundtrip_brace", "");
    if (!(back == b)) {
      rt.passed = false;
      for (Elem x = 0; x < g.size() && rt.witness.empty(); ++x)
        for (Elem y = 0; y < g.size(); ++y)
          if (back.circle(x, y) != b.circle(x, y)) {
            rt.witness = {x, y};
            rt.detail = "flows table differs";
            break;
          }
    }
    out.checks.push_back(rt);
  } else {
    out.checks.push_back(skipped("roundtrip_brace", "needs strong index and n + 1 below p"));
  }
}

void prelie_checks(const PreLieRing& p, const SuiteOptions& opt, VerificationReport& out) {
  const AbelianPGroup& g = p.group();
  const auto total = static_cast<std::uint64_t>(g.size()) * g.size() * g.size();
  auto base = verify_prelie(p, total <= opt.max_triples);
  out.checks.insert(out.checks.end(), base.checks.begin(), base.checks.end());
  if (!base.passed()) return;

  auto left = prelie_series(p, SeriesKind::left);
  auto right = prelie_series(p, SeriesKind::right);
  auto strong = prelie_series(p, SeriesKind::strong);
  out.checks.push_back(info("series_left", index_text(left)));
  out.checks.push_back(info("series_right", index_text(right)));
  out.checks.push_back(info("series_strong", index_text(strong)));
  out.checks.push_back(info("series_solvable", index_text(solvable_series(p))));
  auto lcs = lie_lower_central_series(p);
  out.checks.push_back(info("lie_lower_central", index_text(lcs)));

  out.checks.push_back(Check{"socle_is_ideal", prelie_ideal_check(p, socle(p)), {}, ""});
  {
    Check c = info("right_series_ideals", "");
    for (const auto& term : right.chain)
      if (!prelie_ideal_check(p, term)) c = Check{"right_series_ideals", false, {}, "a term is not an ideal"};
    out.checks.push_back(c);
  }
  if (left.nilpotent()) {
    const bool ok = *left.index <= g.log_order() + 1;
    out.checks.push_back(Check{"left_index_bound", ok, {}, index_text(left)});
    out.checks.push_back(Check{"lie_ring_nilpotent", lcs.nilpotent(), {}, index_text(lcs)});
  }
  if (left.nilpotent() && right.nilpotent()) {
    auto r = strong_bound_check(p);
    out.checks.push_back(Check{"strong_bound",
                               r.passed(),
                               {},
                               "strong " + std::to_string(r.strong_index) + ", recursion " +
                                   std::to_string(r.recursion_bound) + ", order " + std::to_string(r.order_bound)});
  }

  if (!small_depth(g, left.index)) {
    out.checks.push_back(skipped("flows", "needs left nilpotency with index and n + 1 below p"));
    return;
  }
  FlowsContext ctx(p);
  Brace b = flows_circle(ctx);
  auto bv = verify_brace(b, opt.verify);
  out.checks.push_back(bv.passed()
                           ? info("flows_brace", "")
                           : Check{"flows_brace", false, bv.first_failure()->witness, bv.first_failure()->detail});
  if (!bv.passed()) return;
  out.checks.push_back(Check{"flows_left_nilpotent", series(b, SeriesKind::left).nilpotent(), {}, ""});
  out.checks.push_back(
      Check{"right_nilpotency_matches", series(b, SeriesKind::right).nilpotent() == right.nilpotent(), {}, ""});

  if (lcs.nilpotent() && *lcs.index - 1 < g.prime()) {
    BchSeries v(p, static_cast<int>(g.prime()) - 1);
    Check c = info("bch_homomorphism", "");
    const auto pairs = static_cast<std::uint64_t>(g.size()) * g.size();
    const Elem step = pairs <= opt.max_triples ? 1 : static_cast<Elem>(pairs / opt.max_triples + 1);
    if (step > 1) c.detail = "strided";
    for (Elem x = 0; x < g.size() && c.passed; x += step)
      for (Elem y = 0; y < g.size(); ++y)
        if (b.circle(ctx.exp_W(x), ctx.exp_W(y)) != ctx.exp_W(v(x, y))) {
          c = Check{"bch_homomorphism", false, {x, y}, "W(a) o W(b) != W(bch(a, b))"};
          break;
        }
    out.checks.push_back(c);
  }

  auto bs = series(b, SeriesKind::strong);
  if (strong.nilpotent() && small_depth(g, bs.index)) {
    PreLieRing back = brace_to_prelie(b);
    out.checks.push_back(Check{"index_preserved", bs.index == strong.index, {}, "flows " + index_text(bs)});
    Check rt = info("roundtrip_prelie", "");
    for (int i = 0; i < g.rank() && rt.passed; ++i)
      for (int j = 0; j < g.rank(); ++j)
        if (back.structure_constant(i, j) != p.structure_constant(i, j)) {
          rt = Check{"roundtrip_prelie", false, {g.generator(i), g.generator(j)}, "structure constant differs"};
          break;
        }
    out.checks.push_back(rt);
  }
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  for (const auto& t : targets)
    if (!t.report.passed()) return false;
  return true;
}

SuiteReport run_suite(const std::vector<AlgebraDocument>& targets, const SuiteOptions& options) {
  SuiteReport out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& doc = targets[i];
    TargetReport t;
    t.name = doc.name.empty() ? "target-" + std::to_string(i) : doc.name;
    t.kind = doc.kind();
    try {
      if (t.kind == DocumentKind::brace)
        brace_checks(doc.brace(), options, t.report);
      else
        prelie_checks(doc.prelie(), options, t.report);
    } catch (const Error& e) {
      t.report.checks.push_back(Check{"exception", false, {}, e.what()});
    }
    out.targets.push_back(std::move(t));
  }
  return out;
}

std::string suite_json(const SuiteReport& report) {
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& t : report.targets) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : t.report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}});
    targets.push_back({{"name", t.name},
                       {"kind", t.kind == DocumentKind::brace ? "brace" : "prelie"},
                       {"passed", t.report.passed()},
                       {"checks", checks}});
  }
  nlohmann::json j{{"passed", report.passed()}, {"targets", targets}};
  return j.dump(2);
}

std::string suite_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& t : report.targets) {
    out << (t.report.passed() ? "PASS " : "FAIL ") << t.name << '\n';
    for (const auto& c : t.report.checks) {
      out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.witness.empty()) {
        out << " witness=(";
        for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
        out << ')';
      }
      if (!c.detail.empty()) out << "  " << c.detail;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace bracelab
