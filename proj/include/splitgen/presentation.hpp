#pragma once

// Algebras presented by generators and rewrite rules, and a small parser for
// polynomial strings such as "2*H^2 - E + 1/2".

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/algebra.hpp"

namespace splitgen {

using Monomial = std::vector<unsigned>;

template <class K>
struct Term {
  typename K::Element coeff;
  Monomial mono;
};

template <class K>
struct RewriteRule {
  Monomial lhs;
  std::vector<Term<K>> rhs;
};

struct Generator {
  std::string name;
  std::int64_t degree = 0;
};

template <class K>
struct Presentation {
  K field;
  std::int64_t grading_modulus = 0;
  std::vector<Generator> generators;
  std::vector<RewriteRule<K>> relations;
};

inline constexpr std::size_t kDefaultBasisBound = 10000;

namespace detail {

inline unsigned total_degree(const Monomial& m) {
  unsigned s = 0;
  for (auto e : m) s += e;
  return s;
}

/// Graded lexicographic order, earlier generators weighing more.
inline bool deglex_less(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline std::string mono_label(const Monomial& m, const std::vector<Generator>& gens) {
  bool single = std::all_of(gens.begin(), gens.end(), [](const Generator& g) { return g.name.size() == 1; });
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty() && !single) s += "*";
    s += gens[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

/// Rewriting engine over a presentation: irreducible monomials and normal forms.
template <class K>
class Rewriter {
 public:
  using Elem = typename K::Element;
  using Coords = std::vector<Elem>;

  Rewriter(const Presentation<K>& P, std::size_t bound) : P_(P) {
    const std::size_t g = P.generators.size();
    std::int64_t M = P.grading_modulus == 0 ? 2 : P.grading_modulus;
    if (M < 0 || M % 2 != 0) throw EngineError("grading modulus must be even and positive");
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      const auto& rule = P.relations[r];
      if (rule.lhs.size() != g) throw EngineError("relation " + std::to_string(r) + " has the wrong arity");
      if (detail::total_degree(rule.lhs) == 0) throw EngineError("relation with constant left-hand side");
      std::int64_t dl = mono_degree(rule.lhs, M);
      for (const auto& t : rule.rhs) {
        if (t.mono.size() != g) throw EngineError("relation " + std::to_string(r) + " has the wrong arity");
        if (!detail::deglex_less(t.mono, rule.lhs))
          throw EngineError("relation " + label(rule.lhs) + " -> ... has a right-hand term " + label(t.mono) +
                            " not smaller than its leading monomial");
        if (!P.field.is_zero(t.coeff) && mono_degree(t.mono, M) != dl)
          throw EngineError("relation " + label(rule.lhs) + " is not homogeneous modulo " + std::to_string(M));
      }
    }
    // irreducible monomials form an order ideal, so a breadth-first search finds them all
    std::set<Monomial> seen{Monomial(g, 0)};
    std::deque<Monomial> queue{Monomial(g, 0)};
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      basis_.push_back(m);
      if (basis_.size() > bound)
        throw EngineError("quotient appears infinite-dimensional: more than " + std::to_string(bound) +
                          " normal-form monomials");
      for (std::size_t i = 0; i < g; ++i) {
        Monomial n = m;
        ++n[i];
        if (seen.count(n) || reducible(n)) continue;
        seen.insert(n);
        queue.push_back(n);
      }
    }
    std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) {
      unsigned da = detail::total_degree(a), db = detail::total_degree(b);
      if (da != db) return da < db;
      return a > b;
    });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  const std::vector<Monomial>& basis() const { return basis_; }
  std::string label(const Monomial& m) const { return detail::mono_label(m, P_.generators); }
  std::int64_t mono_degree(const Monomial& m, std::int64_t M) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(m[i]) * P_.generators[i].degree;
    return mod_floor(d, M);
  }

  bool reducible(const Monomial& m) const {
    for (const auto& r : P_.relations)
      if (detail::divides(r.lhs, m)) return true;
    return false;
  }

  /// Coordinates of the normal form of a monomial in the irreducible basis.
  const Coords& normal_form(const Monomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    const K& F = P_.field;
    Coords out(basis_.size(), F.zero());
    auto bi = index_.find(m);
    if (bi != index_.end()) {
      out[bi->second] = F.one();
    } else {
      const RewriteRule<K>* rule = nullptr;
      for (const auto& r : P_.relations)
        if (detail::divides(r.lhs, m)) {
          rule = &r;
          break;
        }
      if (!rule) throw EngineError("internal: irreducible monomial missing from basis");
      Monomial q = detail::mono_div(m, rule->lhs);
      for (const auto& t : rule->rhs) {
        if (F.is_zero(t.coeff)) continue;
        Coords sub = normal_form(detail::mono_mul(q, t.mono));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = F.add(out[k], F.mul(t.coeff, sub[k]));
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

  Coords normal_form(const std::vector<Term<K>>& poly) {
    const K& F = P_.field;
    Coords out(basis_.size(), F.zero());
    for (const auto& t : poly) {
      if (F.is_zero(t.coeff)) continue;
      const Coords& sub = normal_form(t.mono);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = F.add(out[k], F.mul(t.coeff, sub[k]));
    }
    return out;
  }

  /// Throws with the offending pair if two leading monomials overlap badly.
  void check_confluence() {
    const auto& rels = P_.relations;
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (std::size_t j = i + 1; j < rels.size(); ++j) {
        Monomial L = detail::mono_lcm(rels[i].lhs, rels[j].lhs);
        if (reduce_once(L, rels[i]) != reduce_once(L, rels[j]))
          throw EngineError("rewrite system is not confluent: critical pair " + label(rels[i].lhs) + " / " +
                            label(rels[j].lhs) + " at " + label(L));
      }
  }

 private:
  Coords reduce_once(const Monomial& L, const RewriteRule<K>& r) {
    Monomial q = detail::mono_div(L, r.lhs);
    std::vector<Term<K>> poly;
    for (const auto& t : r.rhs) poly.push_back({t.coeff, detail::mono_mul(q, t.mono)});
    return normal_form(poly);
  }

  const Presentation<K>& P_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::map<Monomial, Coords> memo_;
};

template <class K>
Algebra<K> algebra_from_presentation(const Presentation<K>& P, std::size_t bound = kDefaultBasisBound) {
  Rewriter<K> rw(P, bound);
  rw.check_confluence();
  const auto& basis = rw.basis();
  const std::size_t n = basis.size();
  const std::int64_t M = P.grading_modulus == 0 ? 2 : P.grading_modulus;
  std::vector<typename K::Element> table;
  table.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = rw.normal_form(detail::mono_mul(basis[i], basis[j]));
      table.insert(table.end(), c.begin(), c.end());
    }
  std::vector<std::int64_t> degrees;
  std::vector<std::string> labels;
  for (const auto& m : basis) {
    degrees.push_back(rw.mono_degree(m, M));
    labels.push_back(rw.label(m));
  }
  std::vector<typename K::Element> unit(n, P.field.zero());
  unit[0] = P.field.one();  // the empty monomial sorts first
  return Algebra<K>::from_table(P.field, n, std::move(table), std::move(degrees), M, std::move(labels), unit);
}

// ---- parsing ----------------------------------------------------------------

namespace detail {

class PolyLexer {
 public:
  PolyLexer(const std::string& s, const std::vector<Generator>& gens) : s_(s), gens_(gens) {}

  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  mpz_class integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return mpz_class(s_.substr(start, i_ - start));
  }
  /// Longest generator name starting here, or -1.
  int generator() {
    skip();
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const auto& n = gens_[g].name;
      if (n.size() > best_len && s_.compare(i_, n.size(), n) == 0) {
        best = static_cast<int>(g);
        best_len = n.size();
      }
    }
    if (best >= 0) i_ += best_len;
    return best;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + s_ + "\" at column " + std::to_string(i_ + 1) + ": " + what);
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  const std::string& s_;
  const std::vector<Generator>& gens_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses a monomial such as "H^2E" or "x*y^3" (the empty string or "1" is the unit).
inline Monomial parse_monomial(const std::string& s, const std::vector<Generator>& gens) {
  detail::PolyLexer lx(s, gens);
  Monomial m(gens.size(), 0);
  if (lx.done()) return m;
  if (lx.peek() == '1') {
    lx.integer();
    if (!lx.done()) lx.fail("trailing input after 1");
    return m;
  }
  while (!lx.done()) {
    int g = lx.generator();
    if (g < 0) lx.fail("unknown generator");
    unsigned e = 1;
    if (lx.accept('^')) e = static_cast<unsigned>(lx.integer().get_ui());
    m[static_cast<std::size_t>(g)] += e;
    lx.accept('*');
  }
  return m;
}

/// Parses a polynomial with integer or a/b coefficients.
template <class K>
std::vector<Term<K>> parse_polynomial(const std::string& s, const std::vector<Generator>& gens, const K& F) {
  detail::PolyLexer lx(s, gens);
  std::vector<Term<K>> out;
  if (lx.done()) lx.fail("empty polynomial");
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('-')) negative = true;
    else if (!first && !lx.accept('+')) lx.fail("expected '+' or '-'");
    else if (first) lx.accept('+');
    first = false;
    mpz_class num = 1, den = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      num = lx.integer();
      has_coeff = true;
      if (lx.accept('/')) den = lx.integer();
      lx.accept('*');
    }
    Monomial m(gens.size(), 0);
    bool has_mono = false;
    for (;;) {
      char c = lx.peek();
      if (c == '\0' || c == '+' || c == '-') break;
      int g = lx.generator();
      if (g < 0) lx.fail("unknown generator");
      unsigned e = 1;
      if (lx.accept('^')) e = static_cast<unsigned>(lx.integer().get_ui());
      m[static_cast<std::size_t>(g)] += e;
      has_mono = true;
      lx.accept('*');
    }
    if (!has_coeff && !has_mono) lx.fail("empty term");
    if (negative) num = -num;
    out.push_back({F.from_fraction(num, den), m});
  }
  return out;
}

/// An algebra together with the presentation it came from, so that elements
/// can be written as polynomials in the generators.
template <class K>
class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(Presentation<K> P, std::size_t bound = kDefaultBasisBound)
      : P_(std::move(P)), A_(algebra_from_presentation(P_, bound)), bound_(bound) {}

  const Algebra<K>& algebra() const { return A_; }
  const Presentation<K>& presentation() const { return P_; }

  typename Algebra<K>::Element element(const std::string& poly) const {
    return element(parse_polynomial(poly, P_.generators, P_.field));
  }
  typename Algebra<K>::Element element(const std::vector<Term<K>>& poly) const {
    Rewriter<K> rw(P_, bound_);
    return rw.normal_form(poly);
  }
  typename Algebra<K>::Element generator(const std::string& name) const {
    for (std::size_t i = 0; i < P_.generators.size(); ++i)
      if (P_.generators[i].name == name) {
        Monomial m(P_.generators.size(), 0);
        m[i] = 1;
        return element({Term<K>{P_.field.one(), m}});
      }
    throw EngineError("unknown generator " + name);
  }

 private:
  Presentation<K> P_;
  Algebra<K> A_;
  std::size_t bound_;
};

/// Convenience builder: relations as ("lhs", "rhs") strings.
template <class K>
Presentation<K> make_presentation(const K& F, std::int64_t modulus, std::vector<Generator> gens,
                                  const std::vector<std::pair<std::string, std::string>>& rels) {
  Presentation<K> P{F, modulus, std::move(gens), {}};
  for (const auto& [l, r] : rels) {
    RewriteRule<K> rule;
    rule.lhs = parse_monomial(l, P.generators);
    std::string rhs = r;
    if (rhs.find_first_not_of(" ") == std::string::npos || rhs == "0") rhs.clear();
    if (!rhs.empty()) rule.rhs = parse_polynomial(rhs, P.generators, F);
    P.relations.push_back(std::move(rule));
  }
  return P;
}

}  // namespace splitgen
