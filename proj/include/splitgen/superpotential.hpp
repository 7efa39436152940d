#pragma once

// Laurent superpotentials on a torus and their critical points over a finite
// field, found by exhausting (F^x)^n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/factor.hpp"
#include "splitgen/field.hpp"
#include "splitgen/linalg.hpp"

namespace splitgen {

template <class K>
struct SuperpotentialTerm {
  typename K::Element coeff;
  std::vector<std::int64_t> exps;
};

template <class K>
struct Superpotential {
  std::size_t num_vars = 0;
  std::vector<SuperpotentialTerm<K>> terms;
};

/// Checks the shape; zero coefficients are dropped.
template <class K>
Superpotential<K> make_superpotential(const K& F, std::size_t num_vars, std::vector<SuperpotentialTerm<K>> terms) {
  if (num_vars == 0) throw EngineError("superpotential needs at least one variable");
  Superpotential<K> W{num_vars, {}};
  std::set<std::vector<std::int64_t>> seen;
  for (auto& t : terms) {
    if (t.exps.size() != num_vars) throw EngineError("exponent vector has the wrong length");
    if (!seen.insert(t.exps).second) throw EngineError("duplicate exponent vector in superpotential");
    if (!F.is_zero(t.coeff)) W.terms.push_back(std::move(t));
  }
  if (W.terms.empty()) throw EngineError("superpotential has no terms");
  return W;
}

template <class K>
struct CriticalPoint {
  std::vector<typename K::Element> coords;
  bool nondegenerate = false;
  std::optional<unsigned> multiplicity;  // univariate potentials only
};

template <class K>
struct CriticalReport {
  FieldSpec field;
  std::vector<CriticalPoint<K>> points;
  bool complete = false;
  std::uint64_t searched = 0;
};

inline constexpr std::uint64_t kDefaultSearchBound = 2'000'000;

namespace detail {

template <class K>
typename K::Element laurent_monomial(const K& F, const std::vector<typename K::Element>& x,
                                     const std::vector<std::int64_t>& e) {
  typename K::Element r = F.one();
  for (std::size_t i = 0; i < x.size(); ++i) r = F.mul(r, F.pow(x[i], e[i]));
  return r;
}

}  // namespace detail

/// x_i dW/dx_i at x, for each i.
template <class K>
std::vector<typename K::Element> log_gradient(const K& F, const Superpotential<K>& W,
                                              const std::vector<typename K::Element>& x) {
  std::vector<typename K::Element> g(W.num_vars, F.zero());
  for (const auto& t : W.terms) {
    auto m = F.mul(t.coeff, detail::laurent_monomial(F, x, t.exps));
    for (std::size_t i = 0; i < W.num_vars; ++i) g[i] = F.add(g[i], F.mul(F.from_int(t.exps[i]), m));
  }
  return g;
}

/// Matrix of second partial derivatives of W at x.
template <class K>
Matrix<K> hessian(const K& F, const Superpotential<K>& W, const std::vector<typename K::Element>& x) {
  LinAlg<K> L(F);
  const std::size_t n = W.num_vars;
  Matrix<K> h = L.zeros(n, n);
  for (const auto& t : W.terms)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto e = t.exps;
        std::int64_t c = e[i];
        e[i] -= 1;
        c *= e[j];
        e[j] -= 1;
        if (c == 0) continue;
        h(i, j) = F.add(h(i, j), F.mul(F.mul(t.coeff, F.from_int(c)), detail::laurent_monomial(F, x, e)));
      }
  return h;
}

template <class K>
bool is_critical(const K& F, const Superpotential<K>& W, const std::vector<typename K::Element>& x) {
  for (const auto& c : x)
    if (F.is_zero(c)) return false;
  for (const auto& g : log_gradient(F, W, x))
    if (!F.is_zero(g)) return false;
  return true;
}

/// Every point of (F^x)^n where all x_i dW/dx_i vanish, in lexicographic order
/// of the packed coordinates.
inline CriticalReport<FiniteField> toric_critical_points(const FiniteField& F, const Superpotential<FiniteField>& W,
                                                        std::uint64_t search_bound = kDefaultSearchBound) {
  const std::size_t n = W.num_vars;
  if (n > 4) throw EngineError("toric search supports at most 4 variables");
  const std::uint64_t units = F.order() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > search_bound / units) throw EngineError("search space exceeds the bound");
    total *= units;
  }
  CriticalReport<FiniteField> r{F.spec(), {}, false, 0};
  LinAlg<FiniteField> L(F);
  std::vector<std::uint64_t> x(n, 1);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      x[i] = 1 + c % units;
      c /= units;
    }
    ++r.searched;
    if (!is_critical(F, W, x)) continue;
    CriticalPoint<FiniteField> pt{x, L.rank(hessian(F, W, x)) == n, std::nullopt};
    r.points.push_back(std::move(pt));
  }
  if (n == 1) {
    // x W'(x) as a polynomial after clearing the lowest power
    std::int64_t lo = 0, hi = 0;
    for (const auto& t : W.terms) {
      lo = std::min(lo, t.exps[0]);
      hi = std::max(hi, t.exps[0]);
    }
    UniPoly<FiniteField> f{std::vector<std::uint64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
    for (const auto& t : W.terms) {
      auto& slot = f.coeffs[static_cast<std::size_t>(t.exps[0] - lo)];
      slot = F.add(slot, F.mul(t.coeff, F.from_int(t.exps[0])));
    }
    while (!f.coeffs.empty() && F.is_zero(f.coeffs.back())) f.coeffs.pop_back();
    if (!f.coeffs.empty()) {
      auto fac = poly_factor(F, f);
      for (auto& pt : r.points)
        for (const auto& [g, m] : fac.factors)
          if (g.degree() == 1 && F.equal(F.neg(g.coeffs[0]), pt.coords[0])) pt.multiplicity = m;
    }
  }
  r.complete = true;
  for (const auto& pt : r.points)
    if (!is_critical(F, W, pt.coords)) throw EngineError("internal: reported point is not critical");
  return r;
}

}  // namespace splitgen
