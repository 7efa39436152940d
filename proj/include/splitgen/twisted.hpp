#pragma once

// Twisted complexes over a formal one-object base: a graded algebra A viewed
// as a dg-category with zero differential and no higher products.
//
// Conventions.  An object is a list of shifted copies A[s_1], ..., A[s_n]
// with a strictly lower-triangular differential; delta(i, j) maps summand j
// into summand i.  A morphism of degree d from X to Y has entries
// f(i, j) in A^{d + t_i - s_j} (t the target shifts, s the source shifts) and
// composition is matrix multiplication.  The hom differential is
//   d f = delta_Y f - (-1)^{|f|} f delta_X,
// and the Maurer-Cartan equation is delta^2 = 0.  Shifting by k adds k to
// every s_i and multiplies delta by (-1)^k; a morphism of degree d picks up
// (-1)^{dk}.  The cone of a closed degree-0 f : X -> Y is X[1] followed by Y
// with differential [[-delta_X, 0], [-f, delta_Y]].

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/algebra.hpp"
#include "splitgen/blocks.hpp"
#include "splitgen/linalg.hpp"

namespace splitgen {

template <class K>
struct TwObject {
  using Element = typename Algebra<K>::Element;
  Algebra<K> base;
  std::vector<std::int64_t> shifts;
  std::vector<Element> delta;  // row-major, size() x size()

  std::size_t size() const { return shifts.size(); }
  const Element& at(std::size_t i, std::size_t j) const { return delta[i * size() + j]; }
  Element& at(std::size_t i, std::size_t j) { return delta[i * size() + j]; }
};

template <class K>
struct TwMorphism {
  using Element = typename Algebra<K>::Element;
  TwObject<K> source, target;
  std::int64_t degree = 0;
  std::vector<Element> entries;  // row-major, target.size() x source.size()

  const Element& at(std::size_t i, std::size_t j) const { return entries[i * source.size() + j]; }
  Element& at(std::size_t i, std::size_t j) { return entries[i * source.size() + j]; }
};

namespace detail {

template <class K>
void check_entry_degree(const Algebra<K>& A, const typename Algebra<K>::Element& x, std::int64_t want,
                        const std::string& what) {
  if (A.is_zero(x)) return;
  auto d = A.homogeneous_degree(x);
  if (!d || *d != mod_floor(want, A.modulus()))
    throw EngineError(what + " has degree " + (d ? std::to_string(*d) : std::string("mixed")) + ", expected " +
                      std::to_string(mod_floor(want, A.modulus())) + " mod " + std::to_string(A.modulus()));
}

template <class K>
bool same_shape(const TwObject<K>& X, const TwObject<K>& Y) {
  return X.base.same_as(Y.base) && X.shifts == Y.shifts && X.delta == Y.delta;
}

}  // namespace detail

/// Builds an object after checking shape, strict lower-triangularity and degrees.
template <class K>
TwObject<K> tw_object(const Algebra<K>& A, std::vector<std::int64_t> shifts,
                      std::vector<typename Algebra<K>::Element> delta) {
  const std::size_t n = shifts.size();
  if (delta.empty()) delta.assign(n * n, A.zero());
  if (delta.size() != n * n) throw EngineError("differential has the wrong shape");
  TwObject<K> X{A, std::move(shifts), std::move(delta)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = X.at(i, j);
      if (x.size() != A.dim()) throw EngineError("differential entry has the wrong length");
      if (i <= j && !A.is_zero(x)) throw EngineError("differential is not strictly lower triangular");
      detail::check_entry_degree(A, x, 1 + X.shifts[i] - X.shifts[j],
                                 "differential entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  return X;
}

/// The base itself as a one-summand object.
template <class K>
TwObject<K> tw_base(const Algebra<K>& A, std::int64_t shift = 0) {
  return tw_object(A, {shift}, {});
}

template <class K>
TwMorphism<K> tw_morphism(const TwObject<K>& X, const TwObject<K>& Y, std::int64_t degree,
                          std::vector<typename Algebra<K>::Element> entries) {
  const Algebra<K>& A = X.base;
  if (!A.same_as(Y.base)) throw EngineError("morphism between objects over different bases");
  if (entries.empty()) entries.assign(Y.size() * X.size(), A.zero());
  if (entries.size() != Y.size() * X.size()) throw EngineError("morphism has the wrong shape");
  TwMorphism<K> f{X, Y, degree, std::move(entries)};
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      detail::check_entry_degree(A, f.at(i, j), degree + Y.shifts[i] - X.shifts[j],
                                 "morphism entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  return f;
}

template <class K>
TwMorphism<K> identity(const TwObject<K>& X) {
  std::vector<typename Algebra<K>::Element> e(X.size() * X.size(), X.base.zero());
  for (std::size_t i = 0; i < X.size(); ++i) e[i * X.size() + i] = X.base.one();
  return TwMorphism<K>{X, X, 0, std::move(e)};
}

/// x times the identity, as a degree-0 morphism X[s] -> X where x has degree -s.
template <class K>
TwMorphism<K> scalar_morphism(const TwObject<K>& X, const typename Algebra<K>::Element& x, std::int64_t s);

template <class K>
TwObject<K> shift(const TwObject<K>& X, std::int64_t k) {
  TwObject<K> Y = X;
  for (auto& s : Y.shifts) s += k;
  if (k % 2 != 0)
    for (auto& x : Y.delta) x = X.base.neg(x);
  return Y;
}

template <class K>
TwMorphism<K> shift(const TwMorphism<K>& f, std::int64_t k) {
  TwMorphism<K> g{shift(f.source, k), shift(f.target, k), f.degree, f.entries};
  if ((f.degree % 2 != 0) && (k % 2 != 0))
    for (auto& x : g.entries) x = f.source.base.neg(x);
  return g;
}

namespace detail {

template <class K>
std::vector<typename Algebra<K>::Element> matmul(const Algebra<K>& A, const std::vector<typename Algebra<K>::Element>& a,
                                                 std::size_t rows, std::size_t mid,
                                                 const std::vector<typename Algebra<K>::Element>& b, std::size_t cols) {
  std::vector<typename Algebra<K>::Element> r(rows * cols, A.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      const auto& x = a[i * mid + k];
      if (A.is_zero(x)) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& y = b[k * cols + j];
        if (A.is_zero(y)) continue;
        r[i * cols + j] = A.add(r[i * cols + j], A.mul(x, y));
      }
    }
  return r;
}

}  // namespace detail

/// g after f.
template <class K>
TwMorphism<K> compose(const TwMorphism<K>& g, const TwMorphism<K>& f) {
  if (!detail::same_shape(g.source, f.target)) throw EngineError("compose: shape mismatch");
  const Algebra<K>& A = f.source.base;
  return TwMorphism<K>{f.source, g.target, g.degree + f.degree,
                       detail::matmul(A, g.entries, g.target.size(), g.source.size(), f.entries, f.source.size())};
}

/// d f = delta_Y f - (-1)^{|f|} f delta_X.
template <class K>
TwMorphism<K> differential(const TwMorphism<K>& f) {
  const Algebra<K>& A = f.source.base;
  const std::size_t m = f.target.size(), n = f.source.size();
  auto left = detail::matmul(A, f.target.delta, m, m, f.entries, n);
  auto right = detail::matmul(A, f.entries, m, n, f.source.delta, n);
  TwMorphism<K> d{f.source, f.target, f.degree + 1, left};
  for (std::size_t i = 0; i < d.entries.size(); ++i)
    d.entries[i] = (f.degree % 2 == 0) ? A.sub(left[i], right[i]) : A.add(left[i], right[i]);
  return d;
}

template <class K>
bool is_zero(const TwMorphism<K>& f) {
  for (const auto& x : f.entries)
    if (!f.source.base.is_zero(x)) return false;
  return true;
}

template <class K>
bool is_closed(const TwMorphism<K>& f) {
  return is_zero(differential(f));
}

template <class K>
struct McViolation {
  std::size_t row, col;
  typename Algebra<K>::Element residual;
};

/// All nonzero entries of delta^2.
template <class K>
std::vector<McViolation<K>> mc_check(const TwObject<K>& X) {
  const std::size_t n = X.size();
  auto sq = detail::matmul(X.base, X.delta, n, n, X.delta, n);
  std::vector<McViolation<K>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!X.base.is_zero(sq[i * n + j])) out.push_back({i, j, sq[i * n + j]});
  return out;
}

template <class K>
TwObject<K> cone(const TwMorphism<K>& f) {
  if (f.degree != 0) throw EngineError("cone needs a degree-0 morphism");
  if (!is_closed(f)) throw EngineError("cone needs a closed morphism");
  const Algebra<K>& A = f.source.base;
  const TwObject<K>& X = f.source;
  const TwObject<K>& Y = f.target;
  const std::size_t a = X.size(), b = Y.size(), n = a + b;
  std::vector<std::int64_t> shifts;
  for (auto s : X.shifts) shifts.push_back(s + 1);
  shifts.insert(shifts.end(), Y.shifts.begin(), Y.shifts.end());
  std::vector<typename Algebra<K>::Element> delta(n * n, A.zero());
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) delta[i * n + j] = A.neg(X.at(i, j));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < a; ++j) delta[(a + i) * n + j] = A.neg(f.at(i, j));
    for (std::size_t j = 0; j < b; ++j) delta[(a + i) * n + a + j] = Y.at(i, j);
  }
  return tw_object(A, std::move(shifts), std::move(delta));
}

template <class K>
TwMorphism<K> scalar_morphism(const TwObject<K>& X, const typename Algebra<K>::Element& x, std::int64_t s) {
  TwObject<K> src = shift(X, s);
  std::vector<typename Algebra<K>::Element> e(X.size() * X.size(), X.base.zero());
  for (std::size_t i = 0; i < X.size(); ++i) e[i * X.size() + i] = x;
  return tw_morphism(src, X, 0, std::move(e));
}

// ---- Koszul complexes --------------------------------------------------------

template <class K>
struct KoszulEdge {
  typename Algebra<K>::Element element;
  std::int64_t shift = 0;  // even, and the element has degree -shift
};

template <class K>
struct KoszulComplex {
  TwObject<K> object;
  std::vector<KoszulEdge<K>> edges;
  // stage i: the edge morphism K_i[s_i] -> K_i that is coned off, and the
  // diagonal correction term (always zero over a formal base)
  std::vector<TwMorphism<K>> edge_morphisms;
  std::vector<TwMorphism<K>> diagonal_terms;
};

/// Iterated cone K_{i+1} = Cone(a_i : K_i[s_i] -> K_i), starting from the base.
template <class K>
KoszulComplex<K> koszul_build(const Algebra<K>& A, const std::vector<KoszulEdge<K>>& edges) {
  KoszulComplex<K> K_{tw_base(A), edges, {}, {}};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.shift % 2 != 0) throw EngineError("Koszul edge shifts must be even");
    detail::check_entry_degree(A, e.element, -e.shift, "Koszul edge " + std::to_string(i));
    auto a = scalar_morphism(K_.object, e.element, e.shift);
    if (!is_closed(a)) throw EngineError("internal: Koszul edge is not closed");
    K_.diagonal_terms.push_back(tw_morphism(a.source, a.target, 0, {}));
    K_.object = cone(a);
    K_.edge_morphisms.push_back(std::move(a));
  }
  if (!mc_check(K_.object).empty()) throw EngineError("internal: Koszul complex violates Maurer-Cartan");
  return K_;
}

// ---- hom complexes and cohomology -------------------------------------------

/// hom(X, Y) as a finite complex graded by Z/M, with basis the triples
/// (target summand i, source summand j, basis element k of A).
template <class K>
class HomComplex {
 public:
  using Element = typename Algebra<K>::Element;

  HomComplex(TwObject<K> X, TwObject<K> Y) : X_(std::move(X)), Y_(std::move(Y)), L_(X_.base.field()) {
    const Algebra<K>& A = X_.base;
    if (!A.same_as(Y_.base)) throw EngineError("hom between objects over different bases");
    const std::size_t n = size();
    D_ = L_.zeros(n, n);
    classes_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      auto [i, j, k] = unpack(c);
      classes_[c] = mod_floor(A.degree(k) - Y_.shifts[i] + X_.shifts[j], A.modulus());
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto df = differential(to_morphism(basis_vector(c)));
      auto col = to_vector(df);
      for (std::size_t r = 0; r < n; ++r) D_(r, c) = col[r];
    }
  }

  const TwObject<K>& source() const { return X_; }
  const TwObject<K>& target() const { return Y_; }
  std::size_t size() const { return Y_.size() * X_.size() * X_.base.dim(); }
  std::int64_t modulus() const { return X_.base.modulus(); }
  const Matrix<K>& differential_matrix() const { return D_; }
  std::int64_t degree_class(std::size_t c) const { return classes_[c]; }

  /// Dimension of H^n for each class n in Z/M.
  std::vector<std::size_t> cohomology() const {
    const std::int64_t M = modulus();
    std::vector<std::size_t> dims(static_cast<std::size_t>(M), 0), ranks(static_cast<std::size_t>(M), 0);
    for (std::int64_t n = 0; n < M; ++n) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < size(); ++c)
        if (classes_[c] == n) cols.push_back(c);
      dims[static_cast<std::size_t>(n)] = cols.size();
      Matrix<K> sub = L_.zeros(size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < size(); ++r) sub(r, j) = D_(r, cols[j]);
      ranks[static_cast<std::size_t>(n)] = L_.rank(sub);
    }
    std::vector<std::size_t> h(static_cast<std::size_t>(M));
    for (std::int64_t n = 0; n < M; ++n) {
      std::size_t prev = ranks[static_cast<std::size_t>(mod_floor(n - 1, M))];
      h[static_cast<std::size_t>(n)] = dims[static_cast<std::size_t>(n)] - ranks[static_cast<std::size_t>(n)] - prev;
    }
    return h;
  }

  std::vector<Element> cycles() const { return L_.kernel(D_); }
  Span<K> boundaries() const {
    Span<K> s(X_.base.field(), size());
    LinAlg<K> L(X_.base.field());
    Matrix<K> t = L.transpose(D_);
    for (std::size_t r = 0; r < t.rows; ++r) s.insert(Element(t.data.begin() + static_cast<std::ptrdiff_t>(r * t.cols),
                                                            t.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * t.cols)));
    return s;
  }

  Element basis_vector(std::size_t c) const {
    Element v(size(), X_.base.field().zero());
    v[c] = X_.base.field().one();
    return v;
  }

  /// A (homogeneous) vector as a morphism; its degree is read off its support.
  TwMorphism<K> to_morphism(const Element& v) const {
    const Algebra<K>& A = X_.base;
    std::int64_t deg = 0;
    bool found = false;
    std::vector<Element> entries(Y_.size() * X_.size(), A.zero());
    for (std::size_t c = 0; c < size(); ++c) {
      if (A.field().is_zero(v[c])) continue;
      if (found && classes_[c] != deg) throw EngineError("internal: inhomogeneous hom vector");
      deg = classes_[c];
      found = true;
      auto [i, j, k] = unpack(c);
      entries[i * X_.size() + j][k] = v[c];
    }
    return TwMorphism<K>{X_, Y_, deg, std::move(entries)};
  }

  Element to_vector(const TwMorphism<K>& f) const {
    Element v(size(), X_.base.field().zero());
    for (std::size_t c = 0; c < size(); ++c) {
      auto [i, j, k] = unpack(c);
      v[c] = f.at(i, j)[k];
    }
    return v;
  }

 private:
  std::tuple<std::size_t, std::size_t, std::size_t> unpack(std::size_t c) const {
    const std::size_t d = X_.base.dim();
    std::size_t k = c % d;
    std::size_t ij = c / d;
    return {ij / X_.size(), ij % X_.size(), k};
  }

  TwObject<K> X_, Y_;
  LinAlg<K> L_;
  Matrix<K> D_;
  std::vector<std::int64_t> classes_;
};

template <class K>
struct HomTable {
  std::int64_t modulus = 2;
  std::vector<std::size_t> dims;  // H^n for n = 0 .. modulus-1
  std::size_t total() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
  }
  bool operator==(const HomTable&) const = default;
};

template <class K>
HomTable<K> hom_cohomology(const TwObject<K>& X, const TwObject<K>& Y) {
  HomComplex<K> H(X, Y);
  return HomTable<K>{H.modulus(), H.cohomology()};
}

// ---- powers ----------------------------------------------------------------

namespace detail {

template <class K>
std::int64_t endo_shift(const TwMorphism<K>& a) {
  if (a.degree != 0) throw EngineError("power of a morphism needs degree 0");
  if (a.source.size() != a.target.size() || a.target.size() == 0) throw EngineError("power needs X[s] -> X");
  std::int64_t s = a.source.shifts[0] - a.target.shifts[0];
  if (!same_shape(a.source, shift(a.target, s))) throw EngineError("power needs a morphism X[s] -> X");
  return s;
}

template <class K>
TwMorphism<K> plain_power(const TwMorphism<K>& a, std::uint64_t m) {
  const Algebra<K>& A = a.source.base;
  const std::size_t n = a.target.size();
  std::vector<typename Algebra<K>::Element> r(n * n, A.zero());
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = A.one();
  for (std::uint64_t k = 0; k < m; ++k) r = matmul(A, a.entries, n, n, r, n);
  std::int64_t s = endo_shift(a);
  return TwMorphism<K>{shift(a.target, s * static_cast<std::int64_t>(m)), a.target, 0, std::move(r)};
}

}  // namespace detail

/// a^{m_1 (.) m_2 (.) ...}: a^{k+1} = a o a^k[s], applied to each m in turn.
/// Over a formal base this is the plain power, which is asserted.
template <class K>
TwMorphism<K> odot_power(const TwMorphism<K>& a, const std::vector<std::uint64_t>& seq) {
  TwMorphism<K> cur = a;
  std::uint64_t total = 1;
  for (auto m : seq) {
    if (m == 0) throw EngineError("odot exponents must be positive");
    std::int64_t s = detail::endo_shift(cur);
    TwMorphism<K> p = cur;
    for (std::uint64_t k = 1; k < m; ++k) p = compose(cur, shift(p, s));
    cur = p;
    total *= m;
  }
  TwMorphism<K> plain = detail::plain_power(a, total);
  if (!detail::same_shape(cur.source, plain.source) || cur.entries != plain.entries)
    throw EngineError("odot power differs from the plain power over a formal base");
  return cur;
}

// ---- lemma-level checks ------------------------------------------------------

template <class K>
struct PowerInductionReport {
  bool precondition = false;  // a^m = 0
  bool closed = false;        // b is a closed morphism
  bool triangular = false;    // b^k = [[a^k, 0], [*, a^k]] for k <= m
  bool square_vanishes = false;  // (b^m)^2 = 0
  bool ok() const { return precondition && closed && triangular && square_vanishes; }
};

/// b = [[a, 0], [c, a]] acting on Cone(x : A[t] -> A) shifted by s.  With
/// a^m = 0 the corner of b^m is the only survivor, so (b^m)^2 = 0.
template <class K>
PowerInductionReport<K> koszul_power_induction_check(const Algebra<K>& A, const typename Algebra<K>::Element& a,
                                                     std::int64_t s, std::uint64_t m,
                                                     std::optional<typename Algebra<K>::Element> x = std::nullopt,
                                                     std::int64_t t = 0,
                                                     std::optional<typename Algebra<K>::Element> c = std::nullopt) {
  PowerInductionReport<K> r;
  if (m == 0) throw EngineError("power induction needs m >= 1");
  r.precondition = A.is_zero(A.pow(a, m));
  if (!r.precondition) return r;
  if (!x) {
    x = a;
    t = s;
  }
  auto X = koszul_build(A, {{*x, t}}).object;
  TwObject<K> Xs = shift(X, s);
  std::vector<typename Algebra<K>::Element> e(4, A.zero());
  e[0] = a;
  e[3] = a;
  if (c) e[2] = *c;
  auto b = tw_morphism(Xs, X, 0, std::move(e));
  r.closed = is_closed(b);
  if (!r.closed) return r;
  r.triangular = true;
  TwMorphism<K> bk = b;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (k > 1) bk = compose(b, shift(bk, s));
    auto ak = A.pow(a, k);
    if (bk.at(0, 0) != ak || bk.at(1, 1) != ak || !A.is_zero(bk.at(0, 1))) r.triangular = false;
  }
  r.square_vanishes = is_zero(odot_power(b, {m, 2}));
  return r;
}

template <class K>
struct RankBoundReport {
  std::size_t rank = 0, base_rank = 0, edges = 0;
  bool holds() const { return rank <= (std::size_t{1} << edges) * base_rank; }
};

/// rank H(hom(K, J)) <= 2^m rank H(hom(A, J)).
template <class K>
RankBoundReport<K> rank_bound_check(const KoszulComplex<K>& Kx, const TwObject<K>& J) {
  RankBoundReport<K> r;
  r.rank = hom_cohomology(Kx.object, J).total();
  r.base_rank = hom_cohomology(tw_base(Kx.object.base), J).total();
  r.edges = Kx.edges.size();
  return r;
}

template <class K>
struct ConeCompositionReport {
  HomTable<K> four_term_out, cone_out;  // hom(-, base)
  HomTable<K> four_term_in, cone_in;    // hom(base, -)
  bool maps_closed = false;
  bool fg_identity = false;          // F G = id on the cone, exactly
  bool gf_identity_on_cohomology = false;
  bool ok() const {
    return maps_closed && fg_identity && gf_identity_on_cohomology && four_term_out == cone_out &&
           four_term_in == cone_in;
  }
};

namespace detail {

/// True iff phi - 1 sends every cycle of H to a boundary.
template <class K, class Phi>
bool induces_identity(const HomComplex<K>& H, const Phi& phi) {
  Span<K> bd = H.boundaries();
  const Algebra<K>& A = H.source().base;
  auto cyc = H.cycles();
  for (const auto& z : cyc) {
    // split the cycle into homogeneous pieces; each is again a cycle
    std::vector<typename Algebra<K>::Element> pieces(static_cast<std::size_t>(H.modulus()),
                                                     typename Algebra<K>::Element(H.size(), A.field().zero()));
    for (std::size_t c = 0; c < H.size(); ++c) pieces[static_cast<std::size_t>(H.degree_class(c))][c] = z[c];
    for (const auto& v : pieces) {
      bool zero = true;
      for (const auto& x : v) zero = zero && A.field().is_zero(x);
      if (zero) continue;
      auto w = phi(v);
      for (std::size_t c = 0; c < H.size(); ++c) w[c] = A.field().sub(w[c], v[c]);
      if (!bd.contains(w)) return false;
    }
  }
  return true;
}

template <class K>
void place(std::vector<typename Algebra<K>::Element>& m, std::size_t cols, std::size_t r0, std::size_t c0,
           const std::vector<typename Algebra<K>::Element>& block, std::size_t br, std::size_t bc,
           const Algebra<K>& A, bool negate) {
  for (std::size_t i = 0; i < br; ++i)
    for (std::size_t j = 0; j < bc; ++j) m[(r0 + i) * cols + c0 + j] = negate ? A.neg(block[i * bc + j]) : block[i * bc + j];
}

}  // namespace detail

/// Compares the four-term complex X[1] -> Y[1] -> Y -> Z (arrows -alpha from
/// X[1] to Y, the identity from Y[1] to Y, -beta from Y[1] to Z) with
/// Cone(beta alpha) through explicit comparison maps F and G.
template <class K>
ConeCompositionReport<K> cone_composition_check(const TwMorphism<K>& alpha, const TwMorphism<K>& beta) {
  if (!is_closed(alpha) || !is_closed(beta) || alpha.degree != 0 || beta.degree != 0)
    throw EngineError("cone composition needs closed degree-0 morphisms");
  if (!detail::same_shape(alpha.target, beta.source)) throw EngineError("cone composition: maps do not compose");
  const Algebra<K>& A = alpha.source.base;
  const TwObject<K>& X = alpha.source;
  const TwObject<K>& Y = alpha.target;
  const TwObject<K>& Z = beta.target;
  const std::size_t x = X.size(), y = Y.size(), z = Z.size();
  TwObject<K> X1 = shift(X, 1), Y1 = shift(Y, 1);

  // the four-term complex, summands [X[1], Y[1], Y, Z]
  const std::size_t n = x + 2 * y + z;
  std::vector<std::int64_t> shifts;
  for (auto s : X1.shifts) shifts.push_back(s);
  for (auto s : Y1.shifts) shifts.push_back(s);
  for (auto s : Y.shifts) shifts.push_back(s);
  for (auto s : Z.shifts) shifts.push_back(s);
  std::vector<typename Algebra<K>::Element> d(n * n, A.zero());
  const std::size_t oX = 0, oY1 = x, oY = x + y, oZ = x + 2 * y;
  detail::place(d, n, oX, oX, X1.delta, x, x, A, false);
  detail::place(d, n, oY1, oY1, Y1.delta, y, y, A, false);
  detail::place(d, n, oY, oY, Y.delta, y, y, A, false);
  detail::place(d, n, oZ, oZ, Z.delta, z, z, A, false);
  detail::place(d, n, oY, oX, alpha.entries, y, x, A, true);
  detail::place(d, n, oY, oY1, identity(Y).entries, y, y, A, false);
  detail::place(d, n, oZ, oY1, beta.entries, z, y, A, true);
  TwObject<K> T = tw_object(A, shifts, d);
  if (!mc_check(T).empty()) throw EngineError("internal: four-term complex violates Maurer-Cartan");

  TwObject<K> C = cone(compose(beta, alpha));
  const std::size_t c = x + z;
  // F : T -> C is 1 on X[1], beta from Y to Z and 1 on Z
  std::vector<typename Algebra<K>::Element> fe(c * n, A.zero());
  detail::place(fe, n, 0, oX, identity(X).entries, x, x, A, false);
  detail::place(fe, n, x, oY, beta.entries, z, y, A, false);
  detail::place(fe, n, x, oZ, identity(Z).entries, z, z, A, false);
  TwMorphism<K> F = tw_morphism(T, C, 0, fe);
  // G : C -> T is 1 on X[1], alpha from X[1] to Y[1] and 1 on Z
  std::vector<typename Algebra<K>::Element> ge(n * c, A.zero());
  detail::place(ge, c, oX, 0, identity(X).entries, x, x, A, false);
  detail::place(ge, c, oY1, 0, alpha.entries, y, x, A, false);
  detail::place(ge, c, oZ, x, identity(Z).entries, z, z, A, false);
  TwMorphism<K> G = tw_morphism(C, T, 0, ge);

  ConeCompositionReport<K> r;
  r.maps_closed = is_closed(F) && is_closed(G);
  r.fg_identity = compose(F, G).entries == identity(C).entries;
  TwObject<K> B = tw_base(A);
  r.four_term_out = hom_cohomology(T, B);
  r.cone_out = hom_cohomology(C, B);
  r.four_term_in = hom_cohomology(B, T);
  r.cone_in = hom_cohomology(B, C);
  TwMorphism<K> GF = compose(G, F);
  HomComplex<K> out(T, B), in(B, T);
  bool pre = detail::induces_identity(out, [&](const auto& v) { return out.to_vector(compose(out.to_morphism(v), GF)); });
  bool post = detail::induces_identity(in, [&](const auto& v) { return in.to_vector(compose(GF, in.to_morphism(v))); });
  r.gf_identity_on_cohomology = pre && post;
  return r;
}

// ---- generation verdicts -----------------------------------------------------

template <class K>
struct BlockVerdict {
  std::size_t block = 0;
  bool split_generates = false;
  std::vector<std::size_t> nilpotency;  // per edge; 0 where the projection is invertible
  std::optional<std::size_t> invertible_edge;
  HomTable<K> hom;        // H(hom(K_alpha, block))
  unsigned multiplicity = 1;  // residue degree: conjugate blocks represented by this one
};

template <class K>
struct GenerationVerdict {
  BlockDecomposition<K> decomposition;
  std::vector<BlockVerdict<K>> blocks;
  HomTable<K> global;  // H(hom(K, A)) over the whole (extended) algebra
  std::size_t rank_bound = 0;  // 2^m dim A
};

/// Per block: Zero if some projected edge is invertible, SplitGenerates if all
/// are nilpotent; the hom-cohomology cross-check is asserted.
template <class K>
GenerationVerdict<K> split_generation_verdict(const Algebra<K>& A, const std::vector<KoszulEdge<K>>& edges,
                                              bool allow_extension = false, unsigned cap = kDefaultExtensionCap) {
  GenerationVerdict<K> v{block_decompose(A, allow_extension, cap), {}, {}, 0};
  const BlockDecomposition<K>& D = v.decomposition;
  const Algebra<K>& AE = D.algebra;
  std::vector<KoszulEdge<K>> lifted;
  for (const auto& e : edges) {
    if (e.shift % 2 != 0) throw EngineError("edges must have even shifts");
    lifted.push_back({D.lift(e.element), e.shift});
  }
  LinAlg<K> L(AE.field());
  std::size_t sum = 0;
  for (std::size_t a = 0; a < D.blocks.size(); ++a) {
    const auto& blk = D.blocks[a];
    BlockVerdict<K> bv;
    bv.block = a;
    bv.multiplicity = blk.residue_degree;
    Algebra<K> B = block_algebra(D, a);
    Matrix<K> cols = L.from_columns(blk.basis, AE.dim());
    std::vector<KoszulEdge<K>> proj;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      auto x = AE.mul(blk.idempotent, lifted[i].element);
      auto cls = classify_element(D, a, x);
      if (auto* nil = std::get_if<Nilpotent<K>>(&cls)) {
        bv.nilpotency.push_back(nil->index);
      } else {
        bv.nilpotency.push_back(0);
        if (!bv.invertible_edge) bv.invertible_edge = i;
      }
      auto c = L.solve(cols, x);
      if (!c) throw EngineError("internal: edge projection left the block");
      proj.push_back({*c, lifted[i].shift});
    }
    bv.split_generates = !bv.invertible_edge;
    auto Kb = koszul_build(B, proj);
    bv.hom = hom_cohomology(Kb.object, tw_base(B));
    if (bv.split_generates != (bv.hom.total() > 0))
      throw EngineError("dichotomy violated: block " + std::to_string(a) + " verdict disagrees with hom cohomology");
    sum += bv.hom.total();
    v.blocks.push_back(std::move(bv));
  }
  auto Kg = koszul_build(AE, lifted);
  v.global = hom_cohomology(Kg.object, tw_base(AE));
  if (v.global.total() != sum) throw EngineError("internal: block hom ranks do not add up");
  v.rank_bound = (std::size_t{1} << edges.size()) * AE.dim();
  if (v.global.total() > v.rank_bound) throw EngineError("filtration rank bound violated");
  return v;
}

/// Even shifts attached to the exterior generators of H^*(G), G one of U(n),
/// SU(n), Sp(n): a generator in degree 2k-1 contributes shift 2k-2.
inline std::vector<std::int64_t> loop_group_shifts(const std::string& group) {
  static const std::regex re(R"(\s*(U|SU|Sp)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(group, m, re))
    throw EngineError("unsupported group \"" + group + "\" (expected U(n), SU(n) or Sp(n))");
  const std::string kind = m[1];
  const long n = std::stol(m[2]);
  if (n < 1 || n > 64) throw EngineError("group rank out of range");
  std::vector<std::int64_t> out;
  if (kind == "U") {
    for (long k = 1; k <= n; ++k) out.push_back(2 * k - 2);
  } else if (kind == "SU") {
    if (n < 2) throw EngineError("SU(n) needs n >= 2");
    for (long k = 2; k <= n; ++k) out.push_back(2 * k - 2);
  } else {
    for (long k = 1; k <= n; ++k) out.push_back(4 * k - 2);
  }
  return out;
}

}  // namespace splitgen
