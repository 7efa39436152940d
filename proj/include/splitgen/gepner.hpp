#pragma once

// Images of the critical tuples of the lifted Gepner potential: for every
// multiset {l_1, ..., l_r} of N-th roots of unity, the vector of elementary
// symmetric functions (e_1, ..., e_r).  Finite fields are extended to contain
// the roots; in characteristic 0 the roots live in Z[z]/Phi_N(z).

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "splitgen/factor.hpp"
#include "splitgen/field.hpp"

namespace splitgen {

struct GepnerReport {
  unsigned r = 0, N = 0;
  std::string field;      // the field (or cyclotomic ring) the roots live in
  std::size_t roots = 0;  // number of distinct N-th roots of unity found
  std::size_t tuples = 0; // multisets of size r examined
  std::vector<std::vector<std::string>> images;
  std::vector<std::vector<std::string>> distinct_coordinate_images;
};

inline constexpr std::uint64_t kGepnerTupleBound = 1'000'000;

namespace detail {

// Calls f(indices, distinct) for every non-decreasing index vector of length r over [0, k).
template <class F>
void for_each_multiset(std::size_t k, unsigned r, F&& f) {
  std::vector<std::size_t> idx(r, 0);
  if (k == 0) return;
  while (true) {
    bool distinct = true;
    for (unsigned i = 1; i < r; ++i) distinct = distinct && idx[i] != idx[i - 1];
    f(idx, distinct);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - 1) --i;
    if (i < 0) return;
    std::size_t v = idx[static_cast<std::size_t>(i)] + 1;
    for (std::size_t j = static_cast<std::size_t>(i); j < r; ++j) idx[j] = v;
  }
}

inline std::uint64_t multiset_count(std::size_t k, unsigned r) {
  // binom(k + r - 1, r), saturating
  long double c = 1;
  for (unsigned i = 1; i <= r; ++i) c = c * static_cast<long double>(k + r - i) / i;
  return c > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(c + 0.5L);
}

// Z[z]/Phi_N(z), elements as coefficient vectors of length phi(N).
class Cyclotomic {
 public:
  using Element = std::vector<std::int64_t>;

  explicit Cyclotomic(unsigned N) : N_(N) {
    if (N == 0) throw EngineError("cyclotomic ring needs N >= 1");
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<std::vector<std::int64_t>> phi(N + 1);
    for (unsigned n = 1; n <= N; ++n) {
      if (N % n != 0) continue;
      std::vector<std::int64_t> f(n + 1, 0);
      f[0] = -1;
      f[n] = 1;
      for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) f = exact_div(f, phi[d]);
      phi[n] = f;
    }
    modulus_ = phi[N];
  }

  std::size_t rank() const { return modulus_.size() - 1; }
  Element zero() const { return Element(rank(), 0); }
  Element one() const {
    Element e = zero();
    e[0] = 1;
    return e;
  }

  /// z^k reduced.
  Element root(unsigned k) const {
    std::vector<std::int64_t> f(k + 1, 0);
    f[k] = 1;
    return reduce(f);
  }

  Element add(const Element& a, const Element& b) const {
    Element r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = a[i] + b[i];
    return r;
  }

  Element mul(const Element& a, const Element& b) const {
    std::vector<std::int64_t> f(2 * rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) f[i + j] += a[i] * b[j];
    return reduce(f);
  }

  std::string format(const Element& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(rank()) - 1; i >= 0; --i) {
      std::int64_t c = a[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::int64_t m = c < 0 ? -c : c;
      if (m != 1 || i == 0) os << m;
      if (m != 1 && i > 0) os << "*";
      if (i > 1) os << "z^" << i;
      else if (i == 1) os << "z";
    }
    return first ? "0" : os.str();
  }

  std::string name() const { return "Z[z]/Phi_" + std::to_string(N_) + "(z)"; }

 private:
  static std::vector<std::int64_t> exact_div(std::vector<std::int64_t> f, const std::vector<std::int64_t>& g) {
    // g monic
    const std::size_t dg = g.size() - 1;
    std::vector<std::int64_t> q(f.size() - dg, 0);
    for (std::size_t i = f.size(); i-- > dg;) {
      std::int64_t c = f[i];
      q[i - dg] = c;
      for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
    }
    return q;
  }

  Element reduce(std::vector<std::int64_t> f) const {
    const std::size_t n = rank();
    for (std::size_t i = f.size(); i-- > n;) {
      std::int64_t c = f[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= n; ++j) f[i - n + j] -= c * modulus_[j];
    }
    f.resize(n, 0);
    return f;
  }

  unsigned N_;
  std::vector<std::int64_t> modulus_;
};

template <class Ring, class Elem>
void collect_images(const Ring& R, const std::vector<Elem>& roots, unsigned r, GepnerReport& out) {
  if (multiset_count(roots.size(), r) > kGepnerTupleBound) throw EngineError("too many root tuples");
  std::set<std::vector<Elem>> all, distinct;
  for_each_multiset(roots.size(), r, [&](const std::vector<std::size_t>& idx, bool is_distinct) {
    // prod (1 + l_i t): coefficient of t^j is e_j
    std::vector<Elem> e(r + 1, R.zero());
    e[0] = R.one();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j >= 1; --j) e[j] = R.add(e[j], R.mul(e[j - 1], roots[idx[i]]));
    std::vector<Elem> img(e.begin() + 1, e.end());
    ++out.tuples;
    if (is_distinct) distinct.insert(img);
    all.insert(std::move(img));
  });
  auto fmt = [&](const std::set<std::vector<Elem>>& s) {
    std::vector<std::vector<std::string>> v;
    for (const auto& img : s) {
      std::vector<std::string> row;
      for (const auto& x : img) row.push_back(R.format(x));
      v.push_back(std::move(row));
    }
    return v;
  };
  out.images = fmt(all);
  out.distinct_coordinate_images = fmt(distinct);
}

}  // namespace detail

/// Characteristic p > 0: the field F_{p^d}, extended (when allowed) until it
/// holds every N-th root of unity.  Characteristic 0: cyclotomic integers.
inline GepnerReport gepner_critical_images(unsigned r, unsigned N, std::uint64_t p, unsigned d = 1,
                                           bool allow_extension = false, unsigned cap = kDefaultExtensionCap) {
  if (r == 0 || N == 0) throw EngineError("Gepner images need r, N >= 1");
  GepnerReport out;
  out.r = r;
  out.N = N;
  if (p == 0) {
    detail::Cyclotomic Z(N);
    std::vector<detail::Cyclotomic::Element> roots;
    for (unsigned k = 0; k < N; ++k) roots.push_back(Z.root(k));
    out.field = Z.name();
    out.roots = roots.size();
    detail::collect_images(Z, roots, r, out);
    return out;
  }
  std::uint64_t n = N;
  while (n % p == 0) n /= p;
  FiniteField F(field_make(p, d, cap));
  std::uint64_t Q = F.order() % n, pw = Q, ord = 1;
  while (pw != 1 % n) {
    pw = nt::mulmod(pw, F.order(), n);
    ++ord;
  }
  if (ord > 1) {
    if (!allow_extension) throw EngineError("field lacks the " + std::to_string(n) + "-th roots of unity");
    if (static_cast<std::uint64_t>(d) * ord > cap) throw EngineError("extension too large");
    F = FiniteField(field_make(p, static_cast<unsigned>(d * ord), cap));
  }
  PolyRing<FiniteField> R(F);
  auto roots = roots_in_field(F, R.sub(R.monomial(F.one(), n), R.one()));
  if (roots.size() != n) throw EngineError("internal: roots of unity missing after extension");
  std::sort(roots.begin(), roots.end());
  out.field = F.name();
  out.roots = roots.size();
  detail::collect_images(F, roots, r, out);
  return out;
}

}  // namespace splitgen
