#pragma once

// Catalog instances, brute-force enumeration, the plain-text document format
// and the invariant suite driven by the command-line tool.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/prelie.hpp"

namespace bracelab {

// ---- catalog ---------------------------------------------------------------

/// a o b = a + b + p a b on Z/p^n. Requires n >= 2 and n + 1 < p.
Brace radical_brace(Int p, int n);

/// a . b = t a b on Z/p^n.
PreLieRing scalar_prelie(Int p, int n, Int t);

/// (Z/p)^r with e_1 . e_i = e_{i+1} for i < r and every other product 0.
PreLieRing filiform_prelie(Int p, int r);

// ---- documents -------------------------------------------------------------

enum class DocumentKind { brace, prelie };

struct AlgebraDocument {
  std::variant<Brace, PreLieRing> payload;
  std::string name;
  std::string provenance;

  DocumentKind kind() const noexcept { return payload.index() == 0 ? DocumentKind::brace : DocumentKind::prelie; }
  const AbelianPGroup& group() const;
  const Brace& brace() const { return std::get<Brace>(payload); }
  const PreLieRing& prelie() const { return std::get<PreLieRing>(payload); }

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Named catalog objects: radical braces, the zero, scalar and filiform
/// pre-Lie rings and the flows of the nilpotent ones.
std::vector<AlgebraDocument> catalog();

/// Header `<kind> p=<p> n=<n> inv=<e1>,...`, optional `name` and `provenance`
/// lines, then `row <i>: ...` (brace) or `sc <i> <j>: <coords>` (pre-Lie).
std::string serialize(const AlgebraDocument& doc);
/// Throws ParseError on malformed or truncated input and InvariantViolation
/// when well-formed data is inconsistent (n vs. invariants, ranges).
std::vector<AlgebraDocument> deserialize_all(std::string_view text);
/// As deserialize_all, requiring exactly one document.
AlgebraDocument deserialize(std::string_view text);

// ---- enumeration -----------------------------------------------------------

enum class Nilpotency { any, left, strong };

/// Every pre-Lie ring on g (labelled, no isomorphism collapsing) satisfying
/// the requirement. Only well-defined structure constants are generated, so
/// the search space is the product of the admissible value counts.
std::vector<PreLieRing> enumerate_prelie(const AbelianPGroup& g, Nilpotency require,
                                         const EnumerationLimits& limits = {});

/// Size of the search space enumerate_prelie would visit.
std::uint64_t prelie_search_space(const AbelianPGroup& g);

// ---- suite -----------------------------------------------------------------

struct SuiteOptions {
  VerifyOptions verify;
  /// Triple-quantified identities are checked exhaustively up to this many
  /// triples and on a deterministic sample above.
  std::uint64_t max_triples = 20'000'000;
};

struct TargetReport {
  std::string name;
  DocumentKind kind = DocumentKind::brace;
  VerificationReport report;
};

struct SuiteReport {
  std::vector<TargetReport> targets;
  bool passed() const noexcept;
};

SuiteReport run_suite(const std::vector<AlgebraDocument>& targets, const SuiteOptions& options = {});
std::string suite_json(const SuiteReport& report);
std::string suite_text(const SuiteReport& report);

}  // namespace bracelab
