#pragma once

// Nilpotency chains shared by braces and pre-Lie rings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/errors.hpp"

namespace bracelab {

/// solvable and lie_lower_central are produced by the pre-Lie module only.
enum class SeriesKind { left, right, strong, solvable, lie_lower_central };

std::string_view to_string(SeriesKind kind);
/// Throws InvariantViolation on an unknown name.
SeriesKind series_kind_from_string(std::string_view name);

/// chain[0] is the first term (the whole group). index is the 1-based
/// position of the first zero term, or nullopt when the chain stalls above 0.
struct SeriesReport {
  SeriesKind kind = SeriesKind::left;
  std::vector<Subgroup> chain;
  std::optional<int> index;

  bool nilpotent() const noexcept { return index.has_value(); }
  /// 1-based access matching the usual A^1 = A numbering.
  const Subgroup& term(int i) const { return chain.at(static_cast<std::size_t>(i - 1)); }
};

/// One pass/fail line of a verifier, with a witness tuple of element indices
/// when it failed.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<Elem> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const noexcept {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const noexcept {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  const Check* find(std::string_view name) const noexcept {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

/// Builds a left, right or strong chain for a binary operation op(x, y) that
/// is additive in y. `left_additive` says whether op is also additive in x,
/// in which case x ranges over generators too.
template <typename Op>
SeriesReport build_series(const AbelianPGroup& g, SeriesKind kind, bool left_additive, Op op) {
  SeriesReport report;
  report.kind = kind;
  report.chain.push_back(Subgroup::whole(g));
  auto xs = [&](const Subgroup& s) -> const std::vector<Elem>& {
    return left_additive ? s.generators() : s.elements();
  };

  // Left and right terms depend only on their predecessor, so a repeat means
  // the chain is stuck. A strong chain can stall and still descend later, so
  // it is only run to zero when the left and right chains both terminate
  // (strong nilpotency is equivalent to left plus right nilpotency), and then
  // within the (n+1)^(n+1) length bound.
  bool strong_terminates = false;
  std::size_t strong_cap = 0;
  if (kind == SeriesKind::strong) {
    strong_terminates = build_series(g, SeriesKind::left, left_additive, op).nilpotent() &&
                        build_series(g, SeriesKind::right, left_additive, op).nilpotent();
    std::size_t bound = 1;
    for (int i = 0; i <= g.log_order(); ++i) bound *= static_cast<std::size_t>(g.log_order() + 1);
    strong_cap = bound;
  }

  while (true) {
    const Subgroup& last = report.chain.back();
    if (last.is_trivial()) {
      report.index = static_cast<int>(report.chain.size());
      return report;
    }
    SubgroupBuilder next(g);
    const int i = static_cast<int>(report.chain.size());  // computing term i+1
    switch (kind) {
      case SeriesKind::left:
        for (Elem a : xs(report.chain.front()))
          for (Elem x : last.generators()) next.add(op(a, x));
        break;
      case SeriesKind::right:
        for (Elem x : xs(last))
          for (Elem a : report.chain.front().generators()) next.add(op(x, a));
        break;
      case SeriesKind::strong:
        for (int j = 1; j <= i; ++j) {
          const Subgroup& lhs = report.term(j);
          const Subgroup& rhs = report.term(i + 1 - j);
          for (Elem x : xs(lhs))
            for (Elem y : rhs.generators()) next.add(op(x, y));
        }
        break;
      default:
        throw InvariantViolation("build_series handles left, right and strong chains only");
    }
    Subgroup term = std::move(next).finish();
    if (kind != SeriesKind::strong || !strong_terminates) {
      if (term == last) return report;
    } else if (report.chain.size() >= strong_cap && !term.is_trivial()) {
      return report;
    }
    report.chain.push_back(std::move(term));
  }
}

}  // namespace detail
}  // namespace bracelab
