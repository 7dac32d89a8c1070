// Command-line front end: bracelab <command> [args] [--format text|machine].
// Exit status: 0 pass, 1 verification failure, 2 hypothesis violation,
// 3 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bracelab/correspond.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/hopfgalois.hpp"
#include "bracelab/workbench.hpp"
#include "json.hpp"

using namespace bracelab;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kHypothesis = 2, kParse = 3 };

struct Globals {
  std::size_t max_exhaustive = 625;
  std::size_t samples = 200'000;
  std::string output;
  std::string format = "text";

  bool machine() const { return format == "machine"; }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.max_exhaustive = max_exhaustive;
    v.samples = samples;
    return v;
  }
};

/// Malformed input files surface as parse errors whatever the root cause.
struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<AlgebraDocument> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return deserialize_all(buf.str());
  } catch (const ParseError& e) {
    throw LoadError(path + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw LoadError(path + ": " + e.what());
  } catch (const InvalidPrime& e) {
    throw LoadError(path + ": " + e.what());
  }
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw LoadError("cannot write " + g.output);
  out << text;
}

std::string label(const AlgebraDocument& d, std::size_t i) {
  return d.name.empty() ? "document-" + std::to_string(i) : d.name;
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
      out << ')';
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

std::string subgroup_text(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) out += (i ? "," : "") + std::to_string(s.elements()[i]);
  return out + "}";
}

json series_json(const SeriesReport& s) {
  json chain = json::array();
  for (const auto& t : s.chain) chain.push_back(t.size());
  return {{"kind", std::string(to_string(s.kind))},
          {"index", s.index ? json(*s.index) : json(nullptr)},
          {"term_sizes", chain}};
}

std::string series_text(const SeriesReport& s) {
  std::ostringstream out;
  out << to_string(s.kind) << ": " << (s.index ? "index " + std::to_string(*s.index) : std::string("not nilpotent"))
      << "\n";
  for (std::size_t i = 0; i < s.chain.size(); ++i)
    out << "  term " << i + 1 << " (order " << s.chain[i].size() << ")\n";
  return out.str();
}

int verify_cmd(const Globals& g, const std::string& path, DocumentKind want) {
  auto docs = load(path);
  bool ok = true;
  json all = json::array();
  std::string text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].kind() != want) throw LoadError(label(docs[i], i) + " has the wrong kind for this command");
    auto r = want == DocumentKind::brace ? verify_brace(docs[i].brace(), g.verify()) : verify_prelie(docs[i].prelie());
    ok = ok && r.passed();
    all.push_back({{"name", label(docs[i], i)}, {"report", report_json(r)}});
    text += (r.passed() ? "PASS " : "FAIL ") + label(docs[i], i) + "\n" + report_text(r);
  }
  emit(g, g.machine() ? all.dump(2) : text);
  return ok ? kPass : kFail;
}

int convert_cmd(const Globals& g, const std::string& path, bool to_prelie) {
  std::string out;
  auto docs = load(path);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    if (to_prelie != (d.kind() == DocumentKind::brace))
      throw LoadError(label(d, i) + " has the wrong kind for this command");
    AlgebraDocument res =
        to_prelie ? AlgebraDocument{brace_to_prelie(d.brace()), d.name + "-prelie", "associated pre-Lie ring"}
                  : AlgebraDocument{flows_circle(d.prelie()), d.name + "-flows", "group of flows"};
    out += serialize(res);
  }
  emit(g, out);
  return kPass;
}

int roundtrip_cmd(const Globals& g, const std::string& path) {
  auto docs = load(path);
  bool ok = true;
  json all = json::array();
  std::string text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    bool r = docs[i].kind() == DocumentKind::brace ? roundtrip_brace_check(docs[i].brace())
                                                   : roundtrip_prelie_check(docs[i].prelie());
    ok = ok && r;
    all.push_back({{"name", label(docs[i], i)}, {"roundtrip", r}});
    text += (r ? "PASS " : "FAIL ") + label(docs[i], i) + " roundtrip\n";
  }
  emit(g, g.machine() ? all.dump(2) : text);
  return ok ? kPass : kFail;
}

int series_cmd(const Globals& g, const std::string& path, const std::string& kind_name) {
  const SeriesKind kind = series_kind_from_string(kind_name);
  auto docs = load(path);
  json all = json::array();
  std::string text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    if (d.kind() == DocumentKind::brace && kind != SeriesKind::left && kind != SeriesKind::right &&
        kind != SeriesKind::strong)
      throw HypothesisViolated(std::string(to_string(kind)) + " series is defined for pre-Lie rings only");
    auto s = d.kind() == DocumentKind::brace ? series(d.brace(), kind) : prelie_series(d.prelie(), kind);
    all.push_back({{"name", label(d, i)}, {"series", series_json(s)}});
    text += label(d, i) + "\n" + series_text(s);
  }
  emit(g, g.machine() ? all.dump(2) : text);
  return kPass;
}

int ideals_cmd(const Globals& g, const std::string& path) {
  auto docs = load(path);
  bool ok = true;
  json all = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    const AbelianPGroup& grp = d.group();
    json entry{{"name", label(d, i)}};
    text << label(d, i) << '\n';
    if (d.kind() == DocumentKind::brace) {
      json rows = json::array();
      for (int k = 0; k <= grp.log_order(); ++k) {
        Subgroup ann = annihilator(grp, k);
        bool ann_ok = ideal_check(d.brace(), ann);
        json row{{"i", k}, {"annihilator_ideal", ann_ok}};
        text << "  ann(p^" << k << ") order " << ann.size() << (ann_ok ? " ideal" : " NOT an ideal") << '\n';
        ok = ok && ann_ok;
        if (grp.prime() > grp.log_order() + 1) {
          auto f = frobenius_subgroups(d.brace(), k);
          row["powers_equal_multiples"] = f.equal;
          text << "  o-powers of exponent p^" << k << (f.equal ? " = " : " != ") << "p^" << k << "A "
               << subgroup_text(f.multiples) << '\n';
          ok = ok && f.equal;
        }
        rows.push_back(row);
      }
      entry["levels"] = rows;
    } else {
      const PreLieRing& p = d.prelie();
      Subgroup soc = socle(p);
      bool soc_ok = prelie_ideal_check(p, soc);
      ok = ok && soc_ok;
      entry["socle"] = soc.elements();
      entry["socle_ideal"] = soc_ok;
      text << "  socle " << subgroup_text(soc) << (soc_ok ? " ideal" : " NOT an ideal") << '\n';
      json chain = json::array();
      Subgroup cur = Subgroup::whole(grp);
      for (int step = 0; step <= grp.log_order() + 1 && !cur.is_trivial(); ++step) {
        Subgroup next = product_ideal(p, cur);
        bool ideal = prelie_ideal_check(p, next);
        ok = ok && ideal;
        chain.push_back({{"order", next.size()}, {"ideal", ideal}});
        text << "  product ideal order " << next.size() << (ideal ? " ideal" : " NOT an ideal") << '\n';
        if (next == cur) break;
        cur = next;
      }
      entry["product_chain"] = chain;
    }
    all.push_back(entry);
  }
  emit(g, g.machine() ? all.dump(2) : text.str());
  return ok ? kPass : kFail;
}

std::string map_text(const EndoMap& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.images.size(); ++i) out += (i ? "," : "") + std::to_string(f.images[i]);
  return out + "]";
}

int hopf_galois_cmd(const Globals& g, const std::string& path) {
  auto docs = load(path);
  bool ok = true;
  json all = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& d = docs[i];
    if (d.kind() != DocumentKind::prelie) throw LoadError(label(d, i) + " is not a pre-Lie ring");
    const PreLieRing& p = d.prelie();
    auto reps = coset_representatives(p);
    auto structures = hopf_galois_structures(p);
    const bool distinct = pairwise_distinct(structures);
    ok = ok && distinct;
    json list = json::array();
    text << label(d, i) << ": " << structures.size() << " regular subgroups"
         << (distinct ? ", pairwise distinct" : ", NOT distinct") << '\n';
    for (std::size_t s = 0; s < structures.size(); ++s) {
      json elems = json::array();
      for (const auto& e : structures[s].elements) elems.push_back({e.translation, e.automorphism.images});
      list.push_back({{"twist", reps[s].images}, {"elements", elems}});
      text << "  twist " << map_text(reps[s]) << '\n';
    }
    all.push_back({{"name", label(d, i)}, {"distinct", distinct}, {"structures", list}});
  }
  emit(g, g.machine() ? all.dump(2) : text.str());
  return ok ? kPass : kFail;
}

AbelianPGroup parse_group(const std::string& spec) {
  std::vector<Int> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      parts.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("bad group field '" + item + "'", 1, 1);
    }
  }
  if (parts.size() < 2) throw ParseError("group must be p,n,inv[,inv...]", 1, 1);
  std::vector<int> inv(parts.begin() + 2, parts.end());
  AbelianPGroup grp(parts[0], inv);
  if (grp.log_order() != parts[1]) throw ParseError("n does not match the invariants", 1, 1);
  return grp;
}

int enumerate_cmd(const Globals& g, const std::string& group_spec, bool nilpotent) {
  AbelianPGroup grp = [&] {
    try {
      return parse_group(group_spec);
    } catch (const Error& e) {
      throw LoadError(e.what());
    }
  }();
  EnumerationLimits limits;
  auto rings = enumerate_prelie(grp, nilpotent ? Nilpotency::strong : Nilpotency::any, limits);
  if (!g.output.empty()) {
    std::string out;
    for (std::size_t i = 0; i < rings.size(); ++i)
      out += serialize({rings[i], "enumerated-" + std::to_string(i), "enumerate " + group_spec});
    emit(g, out);
  }
  if (g.machine())
    std::cout << json{{"group", group_spec}, {"nilpotent", nilpotent}, {"count", rings.size()}}.dump() << '\n';
  else
    std::cout << rings.size() << " pre-Lie rings" << (nilpotent ? " (nilpotent)" : "") << '\n';
  return kPass;
}

int catalog_cmd(const Globals& g, const std::string& which, Int p, int n) {
  if (which == "radical") {
    emit(g, serialize({radical_brace(p, n), "radical-" + std::to_string(p) + "-" + std::to_string(n),
                       "a o b = a + b + p a b"}));
  } else if (which == "all") {
    std::string out;
    for (const auto& d : catalog()) out += serialize(d);
    emit(g, out);
  } else {
    throw LoadError("unknown catalog family '" + which + "'");
  }
  return kPass;
}

int suite_cmd(const Globals& g, const std::vector<std::string>& paths) {
  std::vector<AlgebraDocument> docs;
  for (const auto& path : paths) {
    auto part = load(path);
    docs.insert(docs.end(), part.begin(), part.end());
  }
  SuiteOptions opt;
  opt.verify = g.verify();
  auto report = run_suite(docs, opt);
  emit(g, g.machine() ? suite_json(report) : suite_text(report));
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braces and pre-Lie rings over finite abelian p-groups"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-exhaustive", g.max_exhaustive, "Group size up to which triple checks are exhaustive");
  app.add_option("--samples", g.samples, "Samples for triple checks above that size");
  app.add_option("--output", g.output, "Write results to this file");
  app.add_option("--format", g.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.fallthrough();

  std::string file;
  std::vector<std::string> files;
  std::string kind = "strong";
  std::string group_spec;
  bool nilpotent = false;
  std::string family;
  Int p = 0;
  int n = 0;

  auto* vb = app.add_subcommand("verify-brace", "Check the brace axioms");
  vb->add_option("file", file)->required();
  auto* vp = app.add_subcommand("verify-prelie", "Check the pre-Lie axioms");
  vp->add_option("file", file)->required();
  auto* tp = app.add_subcommand("to-prelie", "Associated pre-Lie ring of a brace");
  tp->add_option("file", file)->required();
  auto* tb = app.add_subcommand("to-brace", "Group of flows of a pre-Lie ring");
  tb->add_option("file", file)->required();
  auto* rt = app.add_subcommand("roundtrip", "Check that the correspondence round-trips");
  rt->add_option("file", file)->required();
  auto* se = app.add_subcommand("series", "Nilpotency series");
  se->add_option("file", file)->required();
  se->add_option("--kind", kind, "left, right, strong, solvable or lie_lower_central");
  auto* id = app.add_subcommand("ideals", "Ideal checks");
  id->add_option("file", file)->required();
  auto* hg = app.add_subcommand("hopf-galois", "Regular subgroups from twisted flows");
  hg->add_option("file", file)->required();
  auto* en = app.add_subcommand("enumerate", "Enumerate pre-Lie rings on a group");
  en->add_option("--group", group_spec, "p,n,inv[,inv...]")->required();
  en->add_flag("--nilpotent", nilpotent, "Keep left and right nilpotent rings only");
  auto* ca = app.add_subcommand("catalog", "Print catalog objects");
  ca->add_option("family", family, "radical or all")->required();
  ca->add_option("--p", p, "Prime for the radical family");
  ca->add_option("--n", n, "Exponent for the radical family");
  auto* su = app.add_subcommand("suite", "Run every invariant check on the given files");
  su->add_option("files", files);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kParse;
  }

  try {
    if (*vb) return verify_cmd(g, file, DocumentKind::brace);
    if (*vp) return verify_cmd(g, file, DocumentKind::prelie);
    if (*tp) return convert_cmd(g, file, true);
    if (*tb) return convert_cmd(g, file, false);
    if (*rt) return roundtrip_cmd(g, file);
    if (*se) return series_cmd(g, file, kind);
    if (*id) return ideals_cmd(g, file);
    if (*hg) return hopf_galois_cmd(g, file);
    if (*en) return enumerate_cmd(g, group_spec, nilpotent);
    if (*ca) return catalog_cmd(g, family, p, n);
    if (*su) return suite_cmd(g, files);
  } catch (const LoadError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const EnumerationBoundExceeded& e) {
    std::cerr << "enumeration bound exceeded: " << e.what() << '\n';
    return kHypothesis;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kPass;
}
