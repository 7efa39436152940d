#pragma once

// Quantum cohomology model rings: projective spaces, the quadric threefold,
// and products, plus the explicit idempotents of QH(CP^n).

#include <gmpxx.h>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/blocks.hpp"
#include "splitgen/presentation.hpp"

namespace splitgen {

/// k[H]/(H^{n+1} - 1) with |H| = 2, graded mod 2n+2.
template <class K>
PresentedAlgebra<K> qh_cpn(unsigned n, const K& F) {
  if (n < 1) throw EngineError("CP^n needs n >= 1");
  return PresentedAlgebra<K>(
      make_presentation(F, 2 * static_cast<std::int64_t>(n) + 2, {{"H", 2}}, {{"H^" + std::to_string(n + 1), "1"}}));
}

/// k[H, E]/(H^2 - 2E, E^2 - H) with |H| = 2, |E| = 4, graded mod 6.
template <class K>
PresentedAlgebra<K> qh_quadric3(const K& F) {
  return PresentedAlgebra<K>(make_presentation(F, 6, {{"H", 2}, {"E", 4}}, {{"H^2", "2E"}, {"E^2", "H"}}));
}

/// Tensor product of two even-supported algebras over the same field.  The
/// grading is the common coarsening, modulo the gcd of the two moduli.
template <class K>
Algebra<K> qh_product(const Algebra<K>& A, const Algebra<K>& B) {
  if (A.has_odd_part() || B.has_odd_part()) throw EngineError("Koszul signs unsupported: odd-degree factor in product");
  if (!(A.field() == B.field())) throw EngineError("product of algebras over different fields");
  const K& F = A.field();
  const std::size_t a = A.dim(), b = B.dim(), n = a * b;
  std::int64_t M = std::gcd(A.modulus(), B.modulus());
  std::vector<typename K::Element> table(n * n * n, F.zero());
  for (std::size_t i1 = 0; i1 < a; ++i1)
    for (std::size_t i2 = 0; i2 < b; ++i2)
      for (std::size_t j1 = 0; j1 < a; ++j1)
        for (std::size_t j2 = 0; j2 < b; ++j2)
          for (std::size_t k1 = 0; k1 < a; ++k1) {
            const auto& x = A.constant(i1, j1, k1);
            if (F.is_zero(x)) continue;
            for (std::size_t k2 = 0; k2 < b; ++k2) {
              const auto& y = B.constant(i2, j2, k2);
              if (F.is_zero(y)) continue;
              table[((i1 * b + i2) * n + (j1 * b + j2)) * n + (k1 * b + k2)] = F.mul(x, y);
            }
          }
  std::vector<std::int64_t> degrees;
  std::vector<std::string> labels;
  typename Algebra<K>::Element unit;
  for (std::size_t i1 = 0; i1 < a; ++i1)
    for (std::size_t i2 = 0; i2 < b; ++i2) {
      degrees.push_back(A.degree(i1) + B.degree(i2));
      const std::string& la = A.label(i1);
      std::string lb = B.label(i2) == "1" ? "1" : B.label(i2) + "'";
      labels.push_back(la == "1" ? lb : (lb == "1" ? la : la + "*" + lb));
      unit.push_back(F.mul(A.one()[i1], B.one()[i2]));
    }
  return Algebra<K>::from_table(F, n, std::move(table), std::move(degrees), M, std::move(labels), unit);
}

/// Splits n+1 = p^s q with p not dividing q (q = n+1 in characteristic 0).
inline std::pair<unsigned, std::uint64_t> cpn_split(unsigned n, std::uint64_t p) {
  std::uint64_t q = n + 1;
  unsigned s = 0;
  if (p != 0)
    while (q % p == 0) {
      q /= p;
      ++s;
    }
  return {s, q};
}

template <class K>
struct CpnIdempotents {
  Algebra<K> algebra;  // QH(CP^n) over the field actually used
  std::vector<typename K::Element> roots;  // the q-th roots of unity, ascending
  std::vector<typename Algebra<K>::Element> idempotents;  // e_mu in the order of roots
};

/// e_mu = (1/q) sum_{i<q} mu^i H^{p^s i}, one for each q-th root of unity mu.
/// With allow_extension the field grows to F_{p^{d r}}, r the order of p^d mod q.
template <class K>
CpnIdempotents<K> cpn_idempotents(unsigned n, const K& F, bool allow_extension = false,
                                  unsigned cap = kDefaultExtensionCap) {
  auto [s, q] = cpn_split(n, F.characteristic());
  K field = F;
  if constexpr (K::finite) {
    std::uint64_t Q = F.order(), pw = Q % q, r = 1;
    while (pw != 1 % q) {
      pw = nt::mulmod(pw, Q, q);
      ++r;
    }
    if (r > 1) {
      if (!allow_extension) throw EngineError("field lacks the " + std::to_string(q) + "-th roots of unity");
      std::uint64_t degree = F.degree() * r;
      if (degree > cap) throw EngineError("extension too large");
      field = FiniteField(field_make(F.characteristic(), static_cast<unsigned>(degree), cap));
    }
  }
  auto P = qh_cpn(n, field);
  const Algebra<K>& A = P.algebra();
  PolyRing<K> R(field);
  UniPoly<K> cyc = R.sub(R.monomial(field.one(), q), R.one());
  auto roots = roots_in_field(field, cyc);
  if (roots.size() != q) throw EngineError("field lacks the " + std::to_string(q) + "-th roots of unity");
  std::uint64_t ps = 1;
  for (unsigned i = 0; i < s; ++i) ps *= F.characteristic();
  typename Algebra<K>::Element Hps = A.pow(P.generator("H"), ps);
  typename K::Element qinv = field.inv(field.from_int(static_cast<std::int64_t>(q)));
  CpnIdempotents<K> out{A, roots, {}};
  for (const auto& mu : roots) {
    typename Algebra<K>::Element e = A.zero(), h = A.one();
    typename K::Element c = field.one();
    for (std::uint64_t i = 0; i < q; ++i) {
      e = A.add(e, A.scale(h, c));
      h = A.mul(h, Hps);
      c = field.mul(c, mu);
    }
    e = A.scale(e, qinv);
    if (A.mul(e, e) != e) throw EngineError("internal: idempotent formula failed");
    out.idempotents.push_back(std::move(e));
  }
  return out;
}

/// True iff binom(2^s, i) is even for every 0 < i < 2^s, by Lucas' theorem;
/// for s <= 6 the answer is cross-checked against exact binomials.
inline bool binomial_column_test(unsigned s) {
  if (s < 1) throw EngineError("binomial column test needs s >= 1");
  if (s > 62) throw EngineError("binomial column test supports s <= 62");
  const std::uint64_t n = std::uint64_t{1} << s;
  // Lucas: binom(n, i) is odd iff the binary digits of i are bounded by those of n
  auto lucas_odd = [n](std::uint64_t i) { return (i & ~n) == 0; };
  bool all_even = true;
  std::uint64_t limit = s <= 20 ? n : 0;
  if (limit) {
    for (std::uint64_t i = 1; i < limit; ++i)
      if (lucas_odd(i)) all_even = false;
  } else {
    // every 0 < i < 2^s has a bit below position s, which n lacks
    all_even = true;
  }
  if (s <= 6) {
    for (std::uint64_t i = 1; i < n; ++i) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), n, i);
      bool even = mpz_even_p(b.get_mpz_t()) != 0;
      if (even == lucas_odd(i)) throw EngineError("internal: Lucas and exact binomials disagree");
    }
  }
  return all_even;
}

}  // namespace splitgen
