#pragma once

// Brace <-> pre-Lie ring correspondence for strongly nilpotent objects of
// small nilpotency index, plus the BCH series used to compare group laws.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/prelie.hpp"

namespace bracelab {

using Rational = boost::multiprecision::cpp_rational;

/// sum_{i=0}^{p-2} xi^{p-1-i} ((xi^i a) * b), evaluated straight from the
/// brace table with no precondition checks.
Elem xi_dot_direct(const Brace& b, Elem x, Elem y);

/// The averaged product as a pre-Lie ring. Requires strong nilpotency with
/// index k < p and n + 1 < p.
PreLieRing xi_dot(const Brace& b);

/// xi_dot scaled by -(1 + p + ... + p^{n-1}).
PreLieRing brace_to_prelie(const Brace& b);

/// Exponential maps of a left nilpotent pre-Lie ring, with W tabulated once
/// and inverted to give Omega.
class FlowsContext {
 public:
  /// Throws NotNilpotent when P is not left nilpotent and HypothesisViolated
  /// unless its left index k and n + 1 are both below p.
  explicit FlowsContext(PreLieRing p);

  const PreLieRing& prelie() const noexcept { return prelie_; }
  int depth() const noexcept { return k_; }

  /// e^{L_x}(b) = sum_{m<k} L_x^m(b) / m!.
  Elem exp_L_apply(Elem x, Elem b) const;
  /// e^{L_x} as an additive endomorphism.
  EndoMap exp_L_map(Elem x) const;
  /// W(a) = e^{L_a}(1) - 1.
  Elem exp_W(Elem a) const noexcept { return w_[a]; }
  Elem omega(Elem a) const noexcept { return omega_[a]; }
  const std::vector<Elem>& w_table() const noexcept { return w_; }
  const std::vector<Elem>& omega_table() const noexcept { return omega_; }

 private:
  Elem series(Elem x, Elem b, int first) const;

  PreLieRing prelie_;
  int k_ = 1;
  std::vector<Int> inv_factorials_;
  std::vector<Elem> w_;
  std::vector<Elem> omega_;
};

/// a o b = a + e^{L_{Omega(a)}}(b).
Brace flows_circle(const FlowsContext& ctx);
Brace flows_circle(const PreLieRing& p);

/// A word in the letters x (0) and y (1) standing for the left-normed bracket
/// [[...[w_1, w_2], ...], w_d], with a rational coefficient.
struct LieWord {
  std::vector<int> letters;
  Rational coefficient;

  std::string to_string() const;
};

/// Coefficient of the word w in the associative series log(e^X e^Y).
Rational bch_word_coefficient(const std::vector<int>& word);

/// Homogeneous terms of log(e^X e^Y) up to degree maxdeg in Dynkin form:
/// each word w of degree d contributes (c_w / d) [[w]]. Zero terms are dropped.
std::vector<LieWord> bch_rational_terms(int maxdeg);

/// Coefficients of log(e^X e^Y) in the basis [x,y], [[y,x],x], [[y,x],y]
/// (with [a,b] = ab - ba).
struct BchLowDegree {
  Rational xy;
  Rational yxx;
  Rational yxy;
};
BchLowDegree bch_low_degree();

/// The Dynkin expansion reduced mod p^n and truncated at a fixed degree,
/// reusable across many evaluations on one pre-Lie ring.
class BchSeries {
 public:
  /// Keeps a reference to p, which must outlive the series.
  /// Truncates at min(maxdeg, Lie class). Throws HypothesisViolated when
  /// maxdeg >= p or the associated Lie ring has class >= p.
  BchSeries(const PreLieRing& p, int maxdeg);

  int degree() const noexcept { return degree_; }
  /// x + y + 1/2 [x,y] + ... with [a,b] = a.b - b.a.
  Elem operator()(Elem x, Elem y) const;

 private:
  struct Term {
    std::vector<int> letters;
    Int coefficient;
  };

  const PreLieRing* prelie_;
  int degree_ = 1;
  std::vector<Term> terms_;
};

Elem bch(Elem x, Elem y, const PreLieRing& p, int maxdeg);

/// brace_to_prelie(flows_circle(P)) == P.
bool roundtrip_prelie_check(const PreLieRing& p);
/// flows_circle(brace_to_prelie(B)) == B.
bool roundtrip_brace_check(const Brace& b);

/// a - 1/2 a.a + 1/4 (a.a).a + 1/12 a.(a.a); agrees with Omega once A^{[4]} = 0.
Elem omega_low_degree(const PreLieRing& p, Elem a);

}  // namespace bracelab
