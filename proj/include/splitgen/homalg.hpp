#pragma once

// Bounded homological invariants: Ext over a polynomial algebra on even
// generators via the Koszul resolution, and Hochschild cohomology of a
// finite-dimensional algebra via the normalized bar complex.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/algebra.hpp"
#include "splitgen/blocks.hpp"
#include "splitgen/linalg.hpp"

namespace splitgen {

// ---- Ext over k[e_1, ..., e_m] ------------------------------------------------

struct ExtProfile {
  std::vector<std::int64_t> generator_degrees;      // -s_i, one per polynomial generator
  std::vector<std::int64_t> ext_generator_degrees;  // s_i + 1, the exterior generators
  std::vector<std::size_t> dims;                    // Ext^j for j = 0 .. m
};

/// hom(-, k) applied to the Koszul resolution of k.  Every differential has
/// entries +-e_i, which the augmentation kills, so each Ext^j is the full
/// Koszul rank binom(m, j); the ranks are still computed, and compared.
template <class K>
ExtProfile ext_over_polynomial(const std::vector<std::int64_t>& degrees, const K& F) {
  const std::size_t m = degrees.size();
  if (m > 16) throw EngineError("Ext computation supports at most 16 generators");
  ExtProfile out;
  for (auto d : degrees) {
    if (d > 0 || d % 2 != 0) throw EngineError("generator degrees must be even and nonpositive");
    out.generator_degrees.push_back(d);
    out.ext_generator_degrees.push_back(-d + 1);
  }
  // subsets of {0..m-1} by size, as bitmasks
  std::vector<std::vector<std::uint32_t>> by_size(m + 1);
  for (std::uint32_t s = 0; s < (1u << m); ++s) by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  LinAlg<K> L(F);
  // rank of the dual differential C^{j-1} -> C^j after augmentation
  std::vector<std::size_t> rank(m + 2, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    // entries are +-e_i, all of which the augmentation sends to zero
    Matrix<K> d = L.zeros(by_size[j].size(), by_size[j - 1].size());
    rank[j] = L.rank(d);
  }
  std::uint64_t binom = 1;
  for (std::size_t j = 0; j <= m; ++j) {
    std::size_t dim = by_size[j].size() - rank[j] - rank[j + 1];
    if (dim != binom) throw EngineError("internal: Ext dimension differs from the Koszul rank");
    out.dims.push_back(dim);
    binom = binom * (m - j) / (j + 1);
  }
  return out;
}

// ---- Hochschild cohomology ---------------------------------------------------

inline constexpr std::uint64_t kDefaultHHBound = 65536;  // dim^{R+2} cells

/// The normalized cochain complex C^r = Hom(A/k^{(x) r}, A), A ungraded.
/// The basis of A is changed so that the unit comes first.
template <class K>
class HochschildComplex {
 public:
  using Elem = typename K::Element;
  using V = Vec<K>;

  explicit HochschildComplex(const Algebra<K>& A) : F_(A.field()), n_(A.dim()) {
    LinAlg<K> L(F_);
    // new basis: the unit, then standard vectors completing it
    std::vector<V> basis{A.one()};
    Span<K> span(F_, n_);
    span.insert(A.one());
    for (std::size_t i = 0; i < n_; ++i)
      if (span.insert(A.basis(i))) basis.push_back(A.basis(i));
    Matrix<K> P = L.from_columns(basis, n_);
    c_.assign(n_ * n_ * n_, F_.zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        auto x = L.solve(P, A.mul(basis[i], basis[j]));
        if (!x) throw EngineError("internal: change of basis failed");
        for (std::size_t k = 0; k < n_; ++k) c_[(i * n_ + j) * n_ + k] = (*x)[k];
      }
  }

  std::size_t dim() const { return n_; }
  const K& field() const { return F_; }

  /// dim C^r = (n-1)^r n.
  std::uint64_t cochain_dim(unsigned r) const {
    std::uint64_t d = n_;
    for (unsigned i = 0; i < r; ++i) d *= n_ - 1;
    return d;
  }

  /// Sparse image of the basis cochain sending the tuple u (indices into the
  /// augmentation quotient, 1..n-1) to b_k and every other tuple to zero.
  std::vector<std::pair<std::uint64_t, Elem>> image(unsigned r, std::uint64_t col) const {
    const std::size_t q = n_ - 1;
    const std::size_t k = static_cast<std::size_t>(col % n_);
    std::vector<std::size_t> u(r);
    std::uint64_t t = col / n_;
    for (unsigned i = 0; i < r; ++i) {
      u[i] = 1 + static_cast<std::size_t>(t % q);
      t /= q;
    }
    std::map<std::uint64_t, Elem> acc;
    auto add = [&](const std::vector<std::size_t>& tuple, std::size_t out, const Elem& c) {
      if (F_.is_zero(c)) return;
      std::uint64_t idx = 0;
      for (std::size_t i = tuple.size(); i-- > 0;) idx = idx * q + (tuple[i] - 1);
      idx = idx * n_ + out;
      auto [it, fresh] = acc.emplace(idx, c);
      if (!fresh) it->second = F_.add(it->second, c);
    };
    std::vector<std::size_t> tup(r + 1);
    // a_1 f(a_2, ..., a_{r+1})
    for (std::size_t x = 1; x < n_; ++x) {
      tup[0] = x;
      for (unsigned i = 0; i < r; ++i) tup[i + 1] = u[i];
      for (std::size_t m = 0; m < n_; ++m) add(tup, m, c(x, k, m));
    }
    // (-1)^i f(..., a_i a_{i+1}, ...)
    for (unsigned i = 1; i <= r; ++i) {
      const bool neg = i % 2 == 1;
      for (std::size_t x = 1; x < n_; ++x)
        for (std::size_t y = 1; y < n_; ++y) {
          Elem coef = c(x, y, u[i - 1]);
          if (F_.is_zero(coef)) continue;
          for (unsigned j = 0; j + 1 < i; ++j) tup[j] = u[j];
          tup[i - 1] = x;
          tup[i] = y;
          for (unsigned j = i; j < r; ++j) tup[j + 1] = u[j];
          add(tup, k, neg ? F_.neg(coef) : coef);
        }
    }
    // (-1)^{r+1} f(a_1, ..., a_r) a_{r+1}
    const bool neg = (r + 1) % 2 == 1;
    for (std::size_t y = 1; y < n_; ++y) {
      for (unsigned i = 0; i < r; ++i) tup[i] = u[i];
      tup[r] = y;
      for (std::size_t m = 0; m < n_; ++m) add(tup, m, neg ? F_.neg(c(k, y, m)) : c(k, y, m));
    }
    std::vector<std::pair<std::uint64_t, Elem>> out;
    for (auto& [i, v] : acc)
      if (!F_.is_zero(v)) out.emplace_back(i, v);
    return out;
  }

  /// d f for a dense cochain f in C^r.
  V apply(unsigned r, const V& f) const {
    V out(cochain_dim(r + 1), F_.zero());
    for (std::uint64_t col = 0; col < f.size(); ++col) {
      if (F_.is_zero(f[col])) continue;
      for (const auto& [i, v] : image(r, col)) out[i] = F_.add(out[i], F_.mul(f[col], v));
    }
    return out;
  }

  /// Rank of d : C^r -> C^{r+1}, by sparse elimination.
  std::size_t rank(unsigned r) const {
    using Sparse = std::vector<std::pair<std::uint64_t, Elem>>;
    std::map<std::uint64_t, Sparse> pivots;  // leading index -> monic row
    for (std::uint64_t col = 0; col < cochain_dim(r); ++col) {
      Sparse v = image(r, col);
      while (!v.empty()) {
        auto it = pivots.find(v.front().first);
        if (it == pivots.end()) break;
        v = axpy(v, F_.neg(v.front().second), it->second);
      }
      if (v.empty()) continue;
      Elem inv = F_.inv(v.front().second);
      for (auto& [i, x] : v) x = F_.mul(x, inv);
      pivots.emplace(v.front().first, std::move(v));
    }
    return pivots.size();
  }

 private:
  const Elem& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  std::vector<std::pair<std::uint64_t, Elem>> axpy(const std::vector<std::pair<std::uint64_t, Elem>>& v, const Elem& a,
                                                   const std::vector<std::pair<std::uint64_t, Elem>>& w) const {
    std::vector<std::pair<std::uint64_t, Elem>> out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        out.emplace_back(w[j].first, F_.mul(a, w[j].second));
        ++j;
      } else {
        Elem s = F_.add(v[i].second, F_.mul(a, w[j].second));
        if (!F_.is_zero(s)) out.emplace_back(v[i].first, s);
        ++i;
        ++j;
      }
    }
    return out;
  }

  K F_;
  std::size_t n_;
  std::vector<Elem> c_;
};

struct HHProfile {
  unsigned bound = 0;              // requested R
  std::vector<std::size_t> dims;   // HH^r for r = 0 .. dims.size()-1
  bool truncated = false;          // the size bound stopped the computation early
  bool parity_split = false;       // some even and some odd r in 1..R with HH^r = 0
};

/// HH^r(A, A) for r = 0 .. R.  When dim^{r+2} exceeds the cell bound, the
/// profile stops before r and is flagged as truncated.
template <class K>
HHProfile hochschild_cohomology(const Algebra<K>& A, unsigned R, std::uint64_t cell_bound = kDefaultHHBound) {
  HHProfile out;
  out.bound = R;
  HochschildComplex<K> H(A);
  const std::uint64_t n = A.dim();
  unsigned last = R;
  {
    std::uint64_t cells = n * n;
    for (unsigned r = 0; r <= R; ++r) {
      if (cells > cell_bound) {
        if (r == 0) throw EngineError("algebra too large for Hochschild cohomology");
        last = r - 1;
        out.truncated = true;
        break;
      }
      cells *= n;
    }
  }
  std::vector<std::size_t> rank(last + 1);
  for (unsigned r = 0; r <= last; ++r) rank[r] = H.rank(r);
  bool even = false, odd = false;
  for (unsigned r = 0; r <= last; ++r) {
    std::size_t d = H.cochain_dim(r) - rank[r] - (r ? rank[r - 1] : 0);
    out.dims.push_back(d);
    if (r >= 1 && d == 0) (r % 2 == 0 ? even : odd) = true;
  }
  out.parity_split = even && odd;
  return out;
}

// ---- semisimplicity and formality reports -------------------------------------

enum class ParityVerdict { ConsistentSemisimple, ConsistentNonSemisimple, Violation };

inline std::string to_string(ParityVerdict v) {
  switch (v) {
    case ParityVerdict::ConsistentSemisimple: return "ConsistentSemisimple";
    case ParityVerdict::ConsistentNonSemisimple: return "ConsistentNonSemisimple";
    case ParityVerdict::Violation: return "Violation";
  }
  return "";
}

struct ParityReport {
  ParityVerdict verdict = ParityVerdict::ConsistentSemisimple;
  std::size_t radical_dim = 0;
  HHProfile profile;
};

/// A non-semisimple algebra cannot have HH vanishing in two degrees of
/// different parity; a semisimple one has no higher HH at all.
template <class K>
ParityReport parity_semisimplicity_check(const Algebra<K>& A, unsigned R, std::uint64_t cell_bound = kDefaultHHBound) {
  if (A.has_odd_part()) throw EngineError("parity check needs an even-supported algebra");
  ParityReport out;
  out.radical_dim = radical(A).size();
  out.profile = hochschild_cohomology(A, R, cell_bound);
  if (out.radical_dim == 0) {
    bool higher = false;
    for (std::size_t r = 1; r < out.profile.dims.size(); ++r) higher = higher || out.profile.dims[r] != 0;
    out.verdict = higher ? ParityVerdict::Violation : ParityVerdict::ConsistentSemisimple;
  } else {
    out.verdict = out.profile.parity_split ? ParityVerdict::Violation : ParityVerdict::ConsistentNonSemisimple;
  }
  return out;
}

struct ReportStep {
  std::string statement;
  bool computed = false;  // false: external input, stated but not computed here
};

struct NonformalityReport {
  bool semisimple = false;
  bool nonformal = false;
  std::string conclusion;
  std::vector<ReportStep> steps;
  ParityReport parity;
};

/// The inference from a non-semisimple ring with unbounded-looking HH to a
/// non-formal A-infinity refinement, with computed and external steps marked.
template <class K>
NonformalityReport nonformality_report(const Algebra<K>& A, unsigned R, std::uint64_t cell_bound = kDefaultHHBound) {
  NonformalityReport out;
  out.parity = parity_semisimplicity_check(A, R, cell_bound);
  if (out.parity.verdict == ParityVerdict::Violation)
    throw EngineError("Hochschild profile contradicts the semisimplicity verdict");
  const auto& prof = out.parity.profile;
  std::string dims;
  for (std::size_t r = 0; r < prof.dims.size(); ++r) dims += (r ? "," : "") + std::to_string(prof.dims[r]);
  out.steps.push_back({"radical dimension " + std::to_string(out.parity.radical_dim), true});
  out.steps.push_back({"HH^r for r = 0.." + std::to_string(prof.dims.size() - 1) + ": [" + dims + "]", true});
  if (out.parity.radical_dim == 0) {
    out.semisimple = true;
    out.conclusion = "semisimple - no obstruction";
    return out;
  }
  out.steps.push_back({"no pair of vanishing HH^r of different parity for 1 <= r <= " +
                           std::to_string(prof.dims.size() - 1),
                       true});
  out.steps.push_back({"a non-semisimple commutative ring has Hochschild cohomology of infinite rank", false});
  out.steps.push_back({"the Hochschild cohomology of the A-infinity refinement is finite-dimensional", false});
  out.steps.push_back({"hence the A-infinity refinement is not quasi-isomorphic to the ring", false});
  out.nonformal = true;
  out.conclusion = "not formal";
  return out;
}

}  // namespace splitgen
