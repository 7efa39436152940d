#pragma once

// Decomposition of a finite-dimensional graded-commutative algebra into local
// blocks e*A cut out by orthogonal primitive idempotents, and the
// nilpotent-or-invertible dichotomy inside a block.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitgen/algebra.hpp"
#include "splitgen/factor.hpp"
#include "splitgen/jordan.hpp"

namespace splitgen {

template <class K>
struct Block {
  using Element = typename Algebra<K>::Element;
  Element idempotent;
  std::vector<Element> basis;  // independent subset of { e b_i }
  std::vector<std::size_t> basis_source;  // the i for each basis vector
  // For every decomposition-even basis element b_i, the monic irreducible
  // polynomial satisfied by the semisimple part of e b_i.
  std::vector<std::pair<std::size_t, UniPoly<K>>> residues;
  unsigned residue_degree = 1;  // dimension of the residue field over the ground field
  std::size_t radical_dim = 0;
  std::vector<Element> radical_basis;
  bool is_field = false;

  std::size_t dim() const { return basis.size(); }

  /// Eigenvalue of b_i on this block, when the residue field is the ground field.
  std::optional<typename K::Element> eigenvalue(const K& F, std::size_t i) const {
    for (const auto& [idx, g] : residues)
      if (idx == i && g.degree() == 1) return F.neg(g.coeffs[0]);
    return std::nullopt;
  }
};

template <class K>
struct BlockDecomposition {
  using Element = typename Algebra<K>::Element;
  Algebra<K> algebra;  // the input algebra, after any extension of scalars
  std::vector<Block<K>> blocks;
  bool extended = false;
  // Maps scalars of the original field into the field actually used.
  std::function<typename K::Element(const typename K::Element&)> embed;

  FieldSpec extension_used() const { return algebra.field().spec(); }

  /// An element of the original algebra, carried into the extended one.
  Element lift(const Element& x) const {
    Element out;
    out.reserve(x.size());
    for (const auto& c : x) out.push_back(embed(c));
    return out;
  }

  std::size_t radical_dim() const {
    std::size_t s = 0;
    for (const auto& b : blocks) s += b.radical_dim;
    return s;
  }
};

namespace detail {

/// Splits the block with idempotent u by the factorization of the minimal
/// polynomial of x (an element of u A) relative to u.
template <class K>
std::vector<typename Algebra<K>::Element> split_by_element(const Algebra<K>& A, const typename Algebra<K>::Element& x,
                                                           const typename Algebra<K>::Element& u) {
  PolyRing<K> R(A.field());
  UniPoly<K> mp = A.minimal_polynomial(x, &u);
  auto fac = poly_factor(A.field(), mp);
  if (!fac.complete)
    throw EngineError("incomplete factorization over " + A.field().name() + " of " + R.format(mp, "lambda"));
  if (fac.factors.size() == 1) return {u};
  std::vector<typename Algebra<K>::Element> out;
  for (const auto& [g, m] : fac.factors) {
    UniPoly<K> fi = R.pow(g, m);
    UniPoly<K> ui = R.div(mp, fi);
    auto [d, s, t] = R.xgcd(ui, fi);
    if (!R.is_one(d)) throw EngineError("internal: primary components are not coprime");
    UniPoly<K> eps = R.mod(R.mul(s, ui), mp);
    out.push_back(A.eval(eps, x, &u));
  }
  return out;
}

template <class K>
struct BlockParts {
  Span<K> semisimple, radical;
  std::vector<typename Algebra<K>::Element> radical_vectors;
};

template <class K>
BlockParts<K> block_parts(const Algebra<K>& A, const typename Algebra<K>::Element& e) {
  BlockParts<K> parts{Span<K>(A.field(), A.dim()), Span<K>(A.field(), A.dim()), {}};
  for (std::size_t i = 0; i < A.dim(); ++i) {
    auto x = A.mul(e, A.basis(i));
    if (A.is_zero(x)) continue;
    if (A.decomposition_even(i)) {
      auto jc = jordan_chevalley(A, x, &e);
      parts.semisimple.insert(jc.semisimple);
      if (parts.radical.insert(jc.nilpotent)) parts.radical_vectors.push_back(jc.nilpotent);
    } else {
      if (parts.radical.insert(x)) parts.radical_vectors.push_back(x);
    }
  }
  return parts;
}

/// Further splitting of a block whose semisimple subalgebra is not a field;
/// returns {e} when it already is one.
template <class K>
std::vector<typename Algebra<K>::Element> complete_split(const Algebra<K>& A, const typename Algebra<K>::Element& e,
                                                         const Span<K>& S) {
  using Element = typename Algebra<K>::Element;
  const K& F = A.field();
  LinAlg<K> L(F);
  const auto& sb = S.rows();
  const std::size_t k = sb.size();
  if (k <= 1) return {e};
  Matrix<K> cols = L.from_columns(sb, A.dim());
  if constexpr (K::finite) {
    // the number of field factors of S is the dimension of its Frobenius-fixed subspace
    Matrix<K> phi = L.zeros(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Element f = A.pow(sb[j], F.order(), &e);
      auto c = L.solve(cols, f);
      if (!c) throw EngineError("internal: semisimple part not closed under Frobenius");
      for (std::size_t i = 0; i < k; ++i) phi(i, j) = (*c)[i];
      phi(j, j) = F.sub(phi(j, j), F.one());
    }
    auto fixed = L.kernel(phi);
    if (fixed.size() <= 1) return {e};
    Span<K> line(F, A.dim());
    line.insert(e);
    for (const auto& c : fixed) {
      Element v = L.apply(cols, c);
      if (line.contains(v)) continue;
      auto pieces = split_by_element(A, v, e);
      if (pieces.size() < 2) throw EngineError("internal: Frobenius-fixed element failed to split");
      return pieces;
    }
    throw EngineError("internal: no splitting element in the fixed subspace");
  } else {
    // look for a primitive element among small integer combinations
    for (std::int64_t bound = 1; bound <= 8; ++bound) {
      std::vector<std::int64_t> c(k, 0);
      for (;;) {
        std::size_t pos = 0;
        while (pos < k && c[pos] == bound) c[pos++] = -bound;
        if (pos == k) break;
        ++c[pos];
        std::vector<typename K::Element> cf;
        for (auto v : c) cf.push_back(F.from_int(v));
        Element v = L.apply(cols, cf);
        if (A.minimal_polynomial(v, &e).degree() == static_cast<int>(k)) return split_by_element(A, v, e);
      }
    }
    throw EngineError("no primitive element found for a semisimple block");
  }
}

template <class K>
std::vector<typename Algebra<K>::Element> primitive_idempotents(const Algebra<K>& A) {
  using Element = typename Algebra<K>::Element;
  std::vector<Element> blocks{A.one()};
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!A.decomposition_even(i)) continue;
    std::vector<Element> next;
    for (const auto& e : blocks) {
      auto pieces = split_by_element(A, A.mul(e, A.basis(i)), e);
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    blocks = std::move(next);
  }
  std::vector<Element> done, work = blocks;
  while (!work.empty()) {
    Element e = work.back();
    work.pop_back();
    auto parts = block_parts(A, e);
    auto pieces = complete_split(A, e, parts.semisimple);
    if (pieces.size() == 1) done.push_back(e);
    else work.insert(work.end(), pieces.begin(), pieces.end());
  }
  return done;
}

template <class K>
Block<K> describe_block(const Algebra<K>& A, const typename Algebra<K>::Element& e) {
  Block<K> b;
  b.idempotent = e;
  Span<K> span(A.field(), A.dim());
  bool odd = false;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    auto x = A.mul(e, A.basis(i));
    if (span.insert(x)) {
      b.basis.push_back(x);
      b.basis_source.push_back(i);
      if (!A.decomposition_even(i)) odd = true;
    }
    if (!A.decomposition_even(i) || A.is_zero(x)) continue;
    auto jc = jordan_chevalley(A, x, &e);
    auto fac = poly_factor(A.field(), A.minimal_polynomial(jc.semisimple, &e));
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
      throw EngineError("internal: block is not local");
    b.residues.emplace_back(i, fac.factors[0].first);
  }
  auto parts = block_parts(A, e);
  b.residue_degree = static_cast<unsigned>(parts.semisimple.dim());
  b.radical_dim = parts.radical.dim();
  b.radical_basis = parts.radical_vectors;
  b.is_field = b.radical_dim == 0 && !odd;
  if (b.residue_degree + b.radical_dim != b.dim()) throw EngineError("internal: block is not semisimple plus radical");
  return b;
}

template <class K>
bool block_less(const Algebra<K>& A, const Block<K>& x, const Block<K>& y) {
  PolyRing<K> R(A.field());
  for (std::size_t i = 0; i < std::min(x.residues.size(), y.residues.size()); ++i) {
    if (x.residues[i].first != y.residues[i].first) return x.residues[i].first < y.residues[i].first;
    if (R.less(x.residues[i].second, y.residues[i].second)) return true;
    if (R.less(y.residues[i].second, x.residues[i].second)) return false;
  }
  if (x.residues.size() != y.residues.size()) return x.residues.size() < y.residues.size();
  const K& F = A.field();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (F.less(x.idempotent[i], y.idempotent[i])) return true;
    if (F.less(y.idempotent[i], x.idempotent[i])) return false;
  }
  return false;
}

template <class K>
std::vector<Block<K>> decompose_over(const Algebra<K>& A) {
  std::vector<Block<K>> out;
  for (const auto& e : primitive_idempotents(A)) out.push_back(describe_block(A, e));
  std::sort(out.begin(), out.end(), [&](const Block<K>& x, const Block<K>& y) { return block_less(A, x, y); });
  return out;
}

}  // namespace detail

/// Block decomposition.  Over a finite field with allow_extension, scalars are
/// extended once to the least field over which every residue field is the
/// ground field, subject to the extension-degree cap.
template <class K>
BlockDecomposition<K> block_decompose(const Algebra<K>& A, bool allow_extension = false,
                                      unsigned cap = kDefaultExtensionCap) {
  BlockDecomposition<K> D{A, detail::decompose_over(A), false, [](const typename K::Element& c) { return c; }};
  if constexpr (K::finite) {
    if (!allow_extension) return D;
    std::uint64_t l = 1;
    for (const auto& b : D.blocks) l = nt::lcm(l, b.residue_degree);
    if (l == 1) return D;
    const FiniteField& F = A.field();
    std::uint64_t degree = F.degree() * l;
    if (degree > cap)
      throw EngineError("extension too large: degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(cap));
    FiniteField big(field_make(F.characteristic(), static_cast<unsigned>(degree), cap));
    FieldEmbedding emb(F, big);
    Algebra<K> ext = A.extend_scalars(big, emb);
    D = BlockDecomposition<K>{ext, detail::decompose_over(ext), true, [emb](const typename K::Element& c) { return emb(c); }};
    for (const auto& b : D.blocks)
      if (b.residue_degree != 1) throw EngineError("internal: extension did not split all residue fields");
  } else {
    (void)cap;
    (void)allow_extension;
  }
  return D;
}

/// Basis of the radical of A: the union of the blocks' maximal ideals.
template <class K>
std::vector<typename Algebra<K>::Element> radical(const Algebra<K>& A) {
  std::vector<typename Algebra<K>::Element> out;
  for (const auto& b : block_decompose(A).blocks) out.insert(out.end(), b.radical_basis.begin(), b.radical_basis.end());
  return out;
}

template <class K>
struct Nilpotent {
  std::size_t index;
};

template <class K>
struct Invertible {
  typename Algebra<K>::Element inverse;
};

template <class K>
using Classification = std::variant<Nilpotent<K>, Invertible<K>>;

/// Nilpotent with its index, or invertible in the block with the inverse
/// assembled from the geometric series in the nilpotent part.
template <class K>
Classification<K> classify_element(const BlockDecomposition<K>& D, std::size_t block,
                                   const typename Algebra<K>::Element& x) {
  using Element = typename Algebra<K>::Element;
  const Algebra<K>& A = D.algebra;
  if (block >= D.blocks.size()) throw EngineError("no such block");
  const Element& e = D.blocks[block].idempotent;
  if (A.mul(e, x) != x) throw EngineError("element does not lie in the block");
  auto [ev, odd] = A.parity_split(x);
  auto jc = jordan_chevalley(A, ev, &e);
  if (A.is_zero(jc.semisimple)) {
    std::size_t m = nilpotency_index(A, x);
    if (m == 0) throw EngineError("internal: element with zero semisimple part is not nilpotent");
    return Nilpotent<K>{m};
  }
  const K& F = A.field();
  // inverse of the semisimple part inside the residue field
  Element s_inv;
  if (D.blocks[block].residue_degree == 1) {
    // s = c e for a scalar c; read c off any coordinate of e
    std::size_t i = 0;
    while (F.is_zero(e[i])) ++i;
    typename K::Element c = F.div(jc.semisimple[i], e[i]);
    if (A.scale(e, c) != jc.semisimple) throw EngineError("internal: semisimple part is not scalar on the block");
    s_inv = A.scale(e, F.inv(c));
  } else {
    UniPoly<K> g = A.minimal_polynomial(jc.semisimple, &e);
    if (F.is_zero(g.coeffs[0])) throw EngineError("internal: nonzero semisimple part is a zero divisor");
    // s^{-1} = -(s^{k-1} + ... + a_1) / a_0
    PolyRing<K> R(F);
    UniPoly<K> h{std::vector<typename K::Element>(g.coeffs.begin() + 1, g.coeffs.end())};
    s_inv = A.scale(A.eval(h, jc.semisimple, &e), F.neg(F.inv(g.coeffs[0])));
  }
  // (s + n)^{-1} = sum_k (-1)^k s^{-(k+1)} n^k
  Element y = A.zero(), term = s_inv, ratio = A.neg(A.mul(s_inv, jc.nilpotent));
  for (std::size_t k = 0; k <= A.dim() && !A.is_zero(term); ++k) {
    y = A.add(y, term);
    term = A.mul(term, ratio);
  }
  if (!A.is_zero(odd)) y = A.sub(y, A.mul(A.mul(y, y), odd));
  if (A.mul(x, y) != e) throw EngineError("internal: series inverse failed");
  auto check = A.inverse(x, &e);
  if (!check || *check != y) throw EngineError("internal: series inverse disagrees with linear solve");
  return Invertible<K>{y};
}

/// The block e A as an algebra in its own right, with unit e and basis the
/// block basis.  The grading survives when e is homogeneous of degree 0;
/// otherwise only parity is kept (and nothing in characteristic 2).
template <class K>
Algebra<K> block_algebra(const BlockDecomposition<K>& D, std::size_t block) {
  const Algebra<K>& A = D.algebra;
  if (block >= D.blocks.size()) throw EngineError("no such block");
  const Block<K>& b = D.blocks[block];
  const K& F = A.field();
  LinAlg<K> L(F);
  const std::size_t n = b.dim();
  Matrix<K> cols = L.from_columns(b.basis, A.dim());
  auto coords = [&](const typename Algebra<K>::Element& x) {
    auto c = L.solve(cols, x);
    if (!c) throw EngineError("internal: product left the block");
    return *c;
  };
  std::vector<typename K::Element> table;
  table.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = coords(A.mul(b.basis[i], b.basis[j]));
      table.insert(table.end(), c.begin(), c.end());
    }
  auto hd = A.homogeneous_degree(b.idempotent);
  std::int64_t modulus = A.modulus();
  std::vector<std::int64_t> degrees;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t src = b.basis_source[i];
    labels.push_back(A.label(src));
    degrees.push_back(A.degree(src));
  }
  if (!hd || *hd != 0) {
    modulus = 2;
    for (std::size_t i = 0; i < n; ++i) degrees[i] = F.characteristic() == 2 ? 0 : degrees[i] % 2;
  }
  return Algebra<K>::from_table(F, n, std::move(table), std::move(degrees), modulus, std::move(labels),
                                coords(b.idempotent));
}

}  // namespace splitgen
