#include "bracelab/correspond.hpp"

#include <random>
#include <string>

#include "bracelab/errors.hpp"

namespace bracelab {

namespace {

void require_small_depth(const AbelianPGroup& g, int k, const char* what) {
  const Int p = g.prime();
  if (k >= p)
    throw HypothesisViolated(std::string(what) + " index " + std::to_string(k) +
                             " is not below p = " + std::to_string(p));
  if (g.log_order() + 1 >= p)
    throw HypothesisViolated("n + 1 = " + std::to_string(g.log_order() + 1) + " is not below p = " + std::to_string(p));
}

std::vector<Int> xi_powers(const AbelianPGroup& g) {
  const Modulus m = g.modulus();
  const Residue xi = teichmueller_xi(m);
  std::vector<Int> out(static_cast<std::size_t>(g.prime()));
  Residue cur{1 % m.value()};
  for (auto& v : out) {
    v = cur.value;
    cur = m.mul(cur, xi);
  }
  return out;
}

Elem averaged(const Brace& b, const std::vector<Int>& xi_pow, Elem x, Elem y) {
  const AbelianPGroup& g = b.group();
  const auto p = static_cast<std::size_t>(g.prime());
  Elem sum = 0;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    Elem star = b.star(g.scale(xi_pow[i], x), y);
    sum = g.add(sum, g.scale(xi_pow[p - 1 - i], star));
  }
  return sum;
}

Int to_residue(const Rational& q, const Modulus& m) {
  using boost::multiprecision::cpp_int;
  cpp_int mod = m.value();
  cpp_int num = boost::multiprecision::numerator(q) % mod;
  if (num < 0) num += mod;
  cpp_int den = boost::multiprecision::denominator(q) % mod;
  Residue inv = mod_inverse(Residue{den.convert_to<Int>()}, m);
  return m.mul(Residue{num.convert_to<Int>()}, inv).value;
}

Rational inverse_factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return 1 / f;
}

}  // namespace

Elem xi_dot_direct(const Brace& b, Elem x, Elem y) { return averaged(b, xi_powers(b.group()), x, y); }

PreLieRing xi_dot(const Brace& b) {
  const AbelianPGroup& g = b.group();
  auto strong = series(b, SeriesKind::strong);
  if (!strong.nilpotent()) throw NotStronglyNilpotent("brace is not strongly nilpotent");
  require_small_depth(g, *strong.index, "strong nilpotency");

  const auto xi_pow = xi_powers(g);
  // The averaged product is additive on the left in theory; spot-check before
  // trusting its values on generators alone.
  std::mt19937_64 rng(0xb1add);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.size() - 1));
  for (int t = 0; t < 64; ++t) {
    Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (averaged(b, xi_pow, g.add(x, y), z) != g.add(averaged(b, xi_pow, x, z), averaged(b, xi_pow, y, z)))
      throw InvariantViolation("averaged product is not additive at (" + std::to_string(x) + ", " + std::to_string(y) +
                               ", " + std::to_string(z) + ")");
  }
  return PreLieRing::from_product(g, [&](Elem x, Elem y) { return averaged(b, xi_pow, x, y); });
}

PreLieRing brace_to_prelie(const Brace& b) {
  PreLieRing dot = xi_dot(b);
  return scale_prelie(dot, geometric_scalar(b.group().modulus()).value);
}

FlowsContext::FlowsContext(PreLieRing p) : prelie_(std::move(p)) {
  const AbelianPGroup& g = prelie_.group();
  auto left = prelie_series(prelie_, SeriesKind::left);
  if (!left.nilpotent()) throw NotNilpotent("pre-Lie ring is not left nilpotent");
  k_ = *left.index;
  require_small_depth(g, k_, "left nilpotency");

  const Modulus m = g.modulus();
  for (int i = 0; i < k_; ++i) inv_factorials_.push_back(factorial_inverse(i, m).value);

  const std::size_t n = g.size();
  w_.resize(n);
  omega_.assign(n, 0);
  std::vector<char> hit(n, 0);
  for (Elem a = 0; a < n; ++a) {
    w_[a] = series(a, a, 1);
    if (hit[w_[a]]) throw InvariantViolation("W is not injective");
    hit[w_[a]] = 1;
    omega_[w_[a]] = a;
  }
}

Elem FlowsContext::series(Elem x, Elem b, int first) const {
  // sum_{m >= first} L_x^{m - first}(b) / m!, truncated at m < k.
  const AbelianPGroup& g = prelie_.group();
  Elem sum = 0;
  Elem term = b;
  for (int m = first; m < k_ && (m == first || term != 0); ++m) {
    if (m > first) term = prelie_.dot(x, term);
    sum = g.add(sum, g.scale(inv_factorials_[static_cast<std::size_t>(m)], term));
  }
  return sum;
}

Elem FlowsContext::exp_L_apply(Elem x, Elem b) const { return series(x, b, 0); }

EndoMap FlowsContext::exp_L_map(Elem x) const {
  const AbelianPGroup& g = prelie_.group();
  EndoMap f;
  for (int i = 0; i < g.rank(); ++i) f.images.push_back(exp_L_apply(x, g.generator(i)));
  return f;
}

Brace flows_circle(const FlowsContext& ctx) {
  const AbelianPGroup& g = ctx.prelie().group();
  const std::size_t n = g.size();
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    auto row = tabulate(g, ctx.exp_L_map(ctx.omega(a)));
    for (Elem b = 0; b < n; ++b) table[a * n + b] = g.add(a, row[b]);
  }
  return Brace(g, std::move(table));
}

Brace flows_circle(const PreLieRing& p) { return flows_circle(FlowsContext(p)); }

std::string LieWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) out += ',';
    out += letters[i] == 0 ? 'x' : 'y';
  }
  return coefficient.str() + " [" + out + "]";
}

Rational bch_word_coefficient(const std::vector<int>& word) {
  const std::size_t d = word.size();
  if (d == 0) return 0;
  // ways[t][k]: weighted ways to cut word[0, t) into k blocks x^r y^s, each
  // block weighted 1 / (r! s!).
  std::vector<std::vector<Rational>> ways(d + 1, std::vector<Rational>(d + 1, Rational(0)));
  ways[0][0] = 1;
  for (std::size_t s = 0; s < d; ++s) {
    int xs = 0, ys = 0;
    for (std::size_t t = s; t < d; ++t) {
      if (word[t] == 0) {
        if (ys > 0) break;
        ++xs;
      } else {
        ++ys;
      }
      Rational weight = inverse_factorial(xs) * inverse_factorial(ys);
      for (std::size_t k = 0; k < d; ++k)
        if (ways[s][k] != 0) ways[t + 1][k + 1] += ways[s][k] * weight;
    }
  }
  Rational c = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    Rational sign = (k % 2 == 1) ? 1 : -1;
    c += sign * ways[d][k] / static_cast<int>(k);
  }
  return c;
}

std::vector<LieWord> bch_rational_terms(int maxdeg) {
  std::vector<LieWord> out;
  for (int d = 1; d <= maxdeg; ++d) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      std::vector<int> w(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>((bits >> (d - 1 - i)) & 1);
      // Left-normed brackets starting with a repeated letter vanish.
      if (d >= 2 && w[0] == w[1]) continue;
      Rational c = bch_word_coefficient(w);
      if (c != 0) out.push_back({std::move(w), c / d});
    }
  }
  return out;
}

BchLowDegree bch_low_degree() {
  return {bch_word_coefficient({0, 1}), bch_word_coefficient({1, 0, 0}), -bch_word_coefficient({1, 1, 0})};
}

BchSeries::BchSeries(const PreLieRing& p, int maxdeg) : prelie_(&p) {
  const AbelianPGroup& g = p.group();
  if (maxdeg >= g.prime())
    throw HypothesisViolated("BCH degree " + std::to_string(maxdeg) + " is not below p = " + std::to_string(g.prime()));
  auto lcs = lie_lower_central_series(p);
  if (!lcs.nilpotent()) throw HypothesisViolated("associated Lie ring is not nilpotent");
  const int lie_class = *lcs.index - 1;
  if (lie_class >= g.prime())
    throw HypothesisViolated("Lie class " + std::to_string(lie_class) +
                             " is not below p = " + std::to_string(g.prime()));
  degree_ = std::max(1, std::min(maxdeg, lie_class));
  const Modulus m = g.modulus();
  for (auto& t : bch_rational_terms(degree_)) {
    Int c = to_residue(t.coefficient, m);
    if (c != 0) terms_.push_back({std::move(t.letters), c});
  }
}

Elem BchSeries::operator()(Elem x, Elem y) const {
  const AbelianPGroup& g = prelie_->group();
  Elem sum = 0;
  for (const auto& t : terms_) {
    Elem v = t.letters[0] == 0 ? x : y;
    for (std::size_t i = 1; i < t.letters.size() && v != 0; ++i)
      v = lie_bracket(*prelie_, v, t.letters[i] == 0 ? x : y);
    sum = g.add(sum, g.scale(t.coefficient, v));
  }
  return sum;
}

Elem bch(Elem x, Elem y, const PreLieRing& p, int maxdeg) { return BchSeries(p, maxdeg)(x, y); }

bool roundtrip_prelie_check(const PreLieRing& p) { return brace_to_prelie(flows_circle(p)) == p; }

bool roundtrip_brace_check(const Brace& b) { return flows_circle(brace_to_prelie(b)) == b; }

Elem omega_low_degree(const PreLieRing& p, Elem a) {
  const AbelianPGroup& g = p.group();
  const Modulus m = g.modulus();
  const Int half = mod_inverse(Residue{2}, m).value;
  const Int quarter = mod_inverse(Residue{4}, m).value;
  const Int twelfth = mod_inverse(Residue{12}, m).value;
  Elem aa = p.dot(a, a);
  Elem out = g.sub(a, g.scale(half, aa));
  out = g.add(out, g.scale(quarter, p.dot(aa, a)));
  return g.add(out, g.scale(twelfth, p.dot(a, aa)));
}

}  // namespace bracelab
