#pragma once

// Squarefree decomposition and factorization of univariate polynomials,
// canonical construction of extension fields, and embeddings between them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/field.hpp"
#include "splitgen/linalg.hpp"
#include "splitgen/poly.hpp"

namespace splitgen {

template <class K>
struct Factorization {
  std::vector<std::pair<UniPoly<K>, unsigned>> factors;
  // False when some returned factor could not be certified irreducible.
  bool complete = true;
};

namespace detail {

template <class K>
void sort_factors(const PolyRing<K>& R, std::vector<std::pair<UniPoly<K>, unsigned>>& fs) {
  std::sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
    if (R.less(a.first, b.first)) return true;
    if (R.less(b.first, a.first)) return false;
    return a.second < b.second;
  });
}

/// g with g^p = f, for f whose exponents are all multiples of p.
inline UniPoly<FiniteField> pth_root_poly(const FiniteField& F, const UniPoly<FiniteField>& f) {
  const std::uint64_t p = F.characteristic();
  UniPoly<FiniteField> g;
  for (std::size_t i = 0; i < f.coeffs.size(); i += p) g.coeffs.push_back(F.pth_root(f.coeffs[i]));
  return g;
}

template <class K>
void squarefree_rec(const PolyRing<K>& R, UniPoly<K> f, unsigned mult,
                    std::vector<std::pair<UniPoly<K>, unsigned>>& out) {
  if (f.degree() <= 0) return;
  UniPoly<K> g = R.gcd(f, R.derivative(f));
  UniPoly<K> w = R.div(f, g);
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly<K> y = R.gcd(w, g);
    UniPoly<K> z = R.div(w, y);
    if (z.degree() > 0) out.emplace_back(R.monic(z), i * mult);
    ++i;
    w = std::move(y);
    g = R.div(g, w);
  }
  if (g.degree() > 0) {
    if constexpr (K::finite) {
      const std::uint64_t p = R.field().characteristic();
      squarefree_rec(R, pth_root_poly(R.field(), g), mult * static_cast<unsigned>(p), out);
    } else {
      throw EngineError("squarefree decomposition left a nonconstant residue in characteristic 0");
    }
  }
}

}  // namespace detail

/// Pairwise coprime squarefree monic parts with their multiplicities.
template <class K>
std::vector<std::pair<UniPoly<K>, unsigned>> squarefree_decomposition(const K& F, const UniPoly<K>& f) {
  PolyRing<K> R(F);
  if (f.degree() < 1) throw EngineError("squarefree decomposition needs a nonconstant polynomial");
  std::vector<std::pair<UniPoly<K>, unsigned>> out;
  detail::squarefree_rec(R, R.monic(f), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

/// Monic squarefree polynomial with the same roots as f.
template <class K>
UniPoly<K> squarefree_part(const K& F, const UniPoly<K>& f) {
  PolyRing<K> R(F);
  UniPoly<K> r = R.one();
  for (const auto& [g, m] : squarefree_decomposition(F, f)) r = R.mul(r, g);
  return r;
}

/// Berlekamp subalgebra basis for a monic squarefree f over a finite field.
inline std::vector<UniPoly<FiniteField>> berlekamp_basis(const FiniteField& F, const UniPoly<FiniteField>& f) {
  PolyRing<FiniteField> R(F);
  LinAlg<FiniteField> L(F);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  UniPoly<FiniteField> xq = R.powmod(R.x(), F.order(), f);
  // m(j, i) = coefficient j of x^{q i} mod f, minus the identity
  Matrix<FiniteField> m = L.zeros(n, n);
  UniPoly<FiniteField> cur = R.one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.coeffs.size(); ++j) m(j, i) = cur.coeffs[j];
    m(i, i) = F.sub(m(i, i), F.one());
    cur = R.mod(R.mul(cur, xq), f);
  }
  std::vector<UniPoly<FiniteField>> out;
  for (auto& v : L.kernel(m)) out.push_back(R.trim(UniPoly<FiniteField>{v}));
  return out;
}

/// Irreducible factors of a monic squarefree polynomial over a finite field.
inline std::vector<UniPoly<FiniteField>> berlekamp_split(const FiniteField& F, const UniPoly<FiniteField>& f) {
  PolyRing<FiniteField> R(F);
  if (f.degree() <= 1) return {f};
  auto basis = berlekamp_basis(F, f);
  const std::size_t r = basis.size();
  if (r == 1) return {f};
  const std::uint64_t p = F.characteristic();
  const unsigned d = F.degree();
  std::vector<UniPoly<FiniteField>> pieces{f};
  for (const auto& v : basis) {
    if (v.degree() <= 0) continue;
    for (unsigned j = 0; j < d && pieces.size() < r; ++j) {
      UniPoly<FiniteField> u = R.mod(R.scale(v, F.pow_u(d > 1 ? F.generator() : 1, j)), f);
      // absolute trace of u, an element of the Berlekamp algebra with F_p values
      UniPoly<FiniteField> w = u, frob = u;
      for (unsigned k = 1; k < d; ++k) {
        frob = R.powmod(frob, p, f);
        w = R.add(w, frob);
      }
      if (w.degree() <= 0) continue;
      std::vector<UniPoly<FiniteField>> next;
      for (const auto& g : pieces) {
        if (g.degree() == 1) {
          next.push_back(g);
          continue;
        }
        UniPoly<FiniteField> wg = R.mod(w, g);
        int left = g.degree();
        for (std::uint64_t c = 0; c < p && left > 0; ++c) {
          UniPoly<FiniteField> h = R.gcd(g, R.sub(wg, R.constant(c)));
          if (h.degree() > 0) {
            next.push_back(h);
            left -= h.degree();
          }
        }
      }
      pieces = std::move(next);
    }
    if (pieces.size() == r) break;
  }
  if (pieces.size() != r) throw EngineError("Berlekamp splitting did not separate all factors");
  return pieces;
}

/// True iff f (nonconstant) is irreducible over the finite field F.
inline bool is_irreducible(const FiniteField& F, const UniPoly<FiniteField>& f) {
  PolyRing<FiniteField> R(F);
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  UniPoly<FiniteField> g = R.monic(f);
  if (R.gcd(g, R.derivative(g)).degree() > 0) return false;
  return berlekamp_basis(F, g).size() == 1;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw EngineError("divisors of zero requested");
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (mpz_class f = 2; f * f <= n; ++f) {
    if (f > 1000000) throw EngineError("rational root search: coefficient too large to factor");
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e) primes.emplace_back(f, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : primes) {
    std::size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Rational roots of a nonzero polynomial, ascending.
inline std::vector<mpq_class> rational_roots(const UniPoly<Rationals>& f) {
  PolyRing<Rationals> R{Rationals{}};
  UniPoly<Rationals> g = f;
  std::vector<mpq_class> roots;
  if (g.degree() < 1) return roots;
  if (g.coeffs[0] == 0) {
    roots.push_back(0);
    while (!g.coeffs.empty() && g.coeffs[0] == 0) g.coeffs.erase(g.coeffs.begin());
  }
  if (g.degree() >= 1) {
    mpz_class den = 1;
    for (const auto& c : g.coeffs) den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : g.coeffs) ints.push_back(mpz_class(c * den));
    auto num_divs = positive_divisors(ints.front());
    auto den_divs = positive_divisors(ints.back());
    for (const auto& a : num_divs)
      for (const auto& b : den_divs)
        for (int sgn : {1, -1}) {
          mpq_class r(a * sgn, b);
          r.canonicalize();
          if (R.eval(g, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// Factorization into monic irreducibles with multiplicities, canonically sorted.
///
/// Over a finite field this is complete.  Over the rationals only rational
/// roots are split off; a remaining factor of degree 2 or 3 is irreducible,
/// and one of degree >= 4 is returned as is with complete = false.
template <class K>
Factorization<K> poly_factor(const K& F, const UniPoly<K>& f) {
  PolyRing<K> R(F);
  if (f.degree() < 1) throw EngineError("factorization needs a nonconstant polynomial");
  Factorization<K> out;
  for (const auto& [g, m] : squarefree_decomposition(F, f)) {
    if constexpr (K::finite) {
      for (auto& h : berlekamp_split(F, g)) out.factors.emplace_back(R.monic(h), m);
    } else {
      UniPoly<K> rest = g;
      for (const auto& r : detail::rational_roots(g)) {
        out.factors.emplace_back(R.linear(r), m);
        rest = R.div(rest, R.linear(r));
      }
      if (rest.degree() >= 1) {
        out.factors.emplace_back(R.monic(rest), m);
        if (rest.degree() >= 4) out.complete = false;
      }
    }
  }
  detail::sort_factors(R, out.factors);
  return out;
}

/// Distinct roots of f lying in F, ascending in the canonical order.
template <class K>
std::vector<typename K::Element> roots_in_field(const K& F, const UniPoly<K>& f) {
  std::vector<typename K::Element> out;
  if (f.degree() < 1) return out;
  if constexpr (K::finite) {
    for (const auto& [g, m] : poly_factor(F, f).factors)
      if (g.degree() == 1) out.push_back(F.neg(g.coeffs[0]));
  } else {
    for (const auto& r : detail::rational_roots(f)) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return F.less(a, b); });
  return out;
}

inline constexpr unsigned kDefaultExtensionCap = 12;

/// Canonical field with p^d elements (p = 0 gives the rationals, with d = 1).
///
/// The modulus is the least monic irreducible of degree d, ordering candidates
/// by the integer whose base-p digits are the lower coefficients.
inline FieldSpec field_make(std::uint64_t p, unsigned d, unsigned cap = kDefaultExtensionCap) {
  if (p == 0) {
    if (d != 1) throw EngineError("the rationals have no extensions here");
    return FieldSpec{};
  }
  if (!nt::is_prime(p)) throw EngineError("characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) throw EngineError("extension degree must be positive");
  if (d > cap) throw EngineError("extension too large");
  if (d == 1) return FieldSpec{p, 1, {}};
  std::uint64_t count = nt::checked_power(p, d);
  if (count == 0) throw EngineError("extension too large");
  FiniteField Fp = FiniteField::prime(p);
  for (std::uint64_t code = 0; code < count; ++code) {
    UniPoly<FiniteField> f;
    std::uint64_t c = code;
    for (unsigned i = 0; i < d; ++i) {
      f.coeffs.push_back(c % p);
      c /= p;
    }
    f.coeffs.push_back(1);
    if (f.coeffs[0] == 0) continue;
    if (is_irreducible(Fp, f)) return FieldSpec{p, d, f.coeffs};
  }
  throw EngineError("no irreducible polynomial found");
}

/// Degree-preserving inclusion F_{p^a} -> F_{p^b} for a | b.
///
/// The generator of the small field goes to the least root (by element code)
/// of its modulus in the big field, so the map is deterministic.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField small, FiniteField big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_.characteristic() != big_.characteristic() || big_.degree() % small_.degree() != 0)
      throw EngineError("no embedding between these fields");
    Elem r = 0;
    if (small_.degree() > 1) {
      PolyRing<FiniteField> R(big_);
      UniPoly<FiniteField> m;
      for (auto c : small_.spec().modulus) m.coeffs.push_back(c);
      auto rs = roots_in_field(big_, m);
      if (rs.empty()) throw EngineError("modulus has no root in the larger field");
      r = rs.front();
    }
    powers_.push_back(1);
    for (unsigned i = 1; i < small_.degree(); ++i) powers_.push_back(big_.mul(powers_.back(), r));
  }

  using Elem = FiniteField::Element;
  const FiniteField& source() const { return small_; }
  const FiniteField& target() const { return big_; }

  Elem operator()(Elem a) const {
    if (small_.degree() == 1) return a;
    auto c = small_.coeffs(a);
    Elem out = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) out = big_.add(out, big_.mul(c[i], powers_[i]));
    return out;
  }
  std::vector<Elem> operator()(const std::vector<Elem>& v) const {
    std::vector<Elem> out;
    out.reserve(v.size());
    for (auto a : v) out.push_back((*this)(a));
    return out;
  }

  FieldEmbedding then(const FieldEmbedding& next) const {
    if (!(next.small_ == big_)) throw EngineError("embeddings do not compose");
    FieldEmbedding out = *this;
    out.big_ = next.big_;
    for (auto& x : out.powers_) x = next(x);
    return out;
  }

 private:
  FiniteField small_, big_;
  std::vector<Elem> powers_;
};

}  // namespace splitgen
