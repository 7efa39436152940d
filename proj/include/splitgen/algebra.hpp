#pragma once

// Finite-dimensional graded-commutative algebras given by structure constants.

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "splitgen/factor.hpp"
#include "splitgen/field.hpp"
#include "splitgen/linalg.hpp"
#include "splitgen/poly.hpp"

namespace splitgen {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

template <class K>
class Algebra {
 public:
  using Elem = typename K::Element;
  using Element = std::vector<Elem>;

  /// Builds and validates an algebra.  table[(i*dim + j)*dim + k] is the
  /// coefficient of b_k in b_i b_j.  A grading modulus of 0 means parity only.
  /// Without an explicit unit one is solved for.
  static Algebra from_table(K field, std::size_t dim, std::vector<Elem> table, std::vector<std::int64_t> degrees,
                            std::int64_t modulus, std::vector<std::string> labels = {},
                            std::optional<Element> unit = std::nullopt) {
    if (dim == 0) throw EngineError("algebra of dimension 0 has no unit");
    if (table.size() != dim * dim * dim) throw EngineError("structure constant tensor has the wrong size");
    if (degrees.size() != dim) throw EngineError("need one degree per basis element");
    if (modulus == 0) modulus = 2;
    if (modulus < 0 || modulus % 2 != 0) throw EngineError("grading modulus must be even and positive");
    if (labels.empty())
      for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    if (labels.size() != dim) throw EngineError("need one label per basis element");
    for (auto& d : degrees) d = mod_floor(d, modulus);
    auto data = std::make_shared<Data>(Data{field, dim, std::move(table), {}, std::move(labels), std::move(degrees), modulus});
    Algebra A(std::move(data));
    if (unit) {
      if (unit->size() != dim) throw EngineError("unit has the wrong length");
      A.d_->unit = *unit;
    } else {
      A.d_->unit = A.solve_unit();
    }
    A.validate();
    return A;
  }

  const K& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  std::int64_t modulus() const { return d_->modulus; }
  std::int64_t degree(std::size_t i) const { return d_->degrees[i]; }
  const std::vector<std::int64_t>& degrees() const { return d_->degrees; }
  int parity(std::size_t i) const { return static_cast<int>(d_->degrees[i] % 2); }
  const std::string& label(std::size_t i) const { return d_->labels[i]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::vector<Elem>& table() const { return d_->table; }
  const Elem& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return d_->table[(i * d_->dim + j) * d_->dim + k];
  }
  bool has_odd_part() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (parity(i)) return true;
    return false;
  }
  /// Elements that behave as even for decomposition purposes: even degree,
  /// or everything in characteristic 2 where no signs appear.
  bool decomposition_even(std::size_t i) const { return parity(i) == 0 || field().characteristic() == 2; }

  bool same_as(const Algebra& o) const { return d_ == o.d_; }

  Element zero() const { return Element(dim(), field().zero()); }
  const Element& one() const { return d_->unit; }
  Element basis(std::size_t i) const {
    Element v = zero();
    v[i] = field().one();
    return v;
  }
  Element scalar(const Elem& c) const { return scale(one(), c); }

  Element add(const Element& a, const Element& b) const {
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = field().add(a[i], b[i]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = field().sub(a[i], b[i]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = field().neg(a[i]);
    return r;
  }
  Element scale(const Element& a, const Elem& c) const {
    Element r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = field().mul(a[i], c);
    return r;
  }
  Element mul(const Element& a, const Element& b) const {
    const K& F = field();
    const std::size_t n = dim();
    Element r = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (F.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (F.is_zero(b[j])) continue;
        Elem c = F.mul(a[i], b[j]);
        const Elem* row = &d_->table[(i * n + j) * n];
        for (std::size_t k = 0; k < n; ++k)
          if (!F.is_zero(row[k])) r[k] = F.add(r[k], F.mul(c, row[k]));
      }
    }
    return r;
  }
  template <class Exp>
  Element pow(Element a, Exp e, const Element* unit = nullptr) const {
    Element r = unit ? *unit : one();
    while (e > 0) {
      if (e % 2 == 1) r = mul(r, a);
      e /= 2;
      if (e > 0) a = mul(a, a);
    }
    return r;
  }
  bool is_zero(const Element& a) const {
    for (const auto& c : a)
      if (!field().is_zero(c)) return false;
    return true;
  }

  /// Matrix of left multiplication by x; column j holds x b_j.
  Matrix<K> mult_operator(const Element& x) const {
    LinAlg<K> L(field());
    Matrix<K> m = L.zeros(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Element c = mul(x, basis(j));
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = c[i];
    }
    return m;
  }

  /// Least monic polynomial g with g(x) = 0, where constants act through
  /// `unit` (the algebra unit, or a block idempotent for block-relative use).
  UniPoly<K> minimal_polynomial(const Element& x, const Element* unit = nullptr) const {
    const Element& u = unit ? *unit : one();
    LinAlg<K> L(field());
    PolyRing<K> R(field());
    if (is_zero(u)) throw EngineError("minimal polynomial relative to the zero idempotent");
    std::vector<Element> powers{u};
    Span<K> span(field(), dim());
    span.insert(u);
    for (;;) {
      Element next = mul(powers.back(), x);
      if (span.contains(next)) {
        auto c = L.solve(L.from_columns(powers, dim()), next);
        if (!c) throw EngineError("internal: Krylov solve failed");
        UniPoly<K> g;
        for (const auto& v : *c) g.coeffs.push_back(field().neg(v));
        g.coeffs.push_back(field().one());
        return R.trim(std::move(g));
      }
      span.insert(next);
      powers.push_back(std::move(next));
    }
  }

  /// g(x), with constants acting through `unit`.
  Element eval(const UniPoly<K>& g, const Element& x, const Element* unit = nullptr) const {
    const Element& u = unit ? *unit : one();
    Element r = zero();
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) r = add(mul(r, x), scale(u, *it));
    return r;
  }

  /// y with x y = unit, found by a linear solve, if one exists.
  std::optional<Element> inverse(const Element& x, const Element* unit = nullptr) const {
    const Element& u = unit ? *unit : one();
    LinAlg<K> L(field());
    auto y = L.solve(mult_operator(x), u);
    if (!y) return std::nullopt;
    return mul(u, *y);
  }

  /// Degree class shared by all nonzero coordinates, if any.
  std::optional<std::int64_t> homogeneous_degree(const Element& x) const {
    std::optional<std::int64_t> d;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field().is_zero(x[i])) continue;
      if (d && *d != degree(i)) return std::nullopt;
      d = degree(i);
    }
    return d;
  }

  /// Split into the part on decomposition-even basis elements and the rest.
  std::pair<Element, Element> parity_split(const Element& x) const {
    Element ev = zero(), od = zero();
    for (std::size_t i = 0; i < dim(); ++i) (decomposition_even(i) ? ev : od)[i] = x[i];
    return {ev, od};
  }

  std::string format(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field().is_zero(x[i])) continue;
      std::string c = field().format(x[i]);
      bool compound = c.find_first_of("+t") != std::string::npos || c.find('-', 1) != std::string::npos;
      if (!first) {
        if (c[0] == '-' && !compound) {
          os << " - ";
          c = c.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      if (compound) c = "(" + c + ")";
      if (label(i) == "1") {
        os << c;
      } else {
        if (c == "-1") os << "-";
        else if (c != "1") os << c << "*";
        os << label(i);
      }
    }
    return first ? "0" : os.str();
  }

  /// The same algebra with scalars pushed through a map into another field.
  template <class K2, class Map>
  Algebra<K2> extend_scalars(const K2& target, const Map& f) const {
    std::vector<typename K2::Element> t;
    t.reserve(d_->table.size());
    for (const auto& c : d_->table) t.push_back(f(c));
    std::vector<typename K2::Element> u;
    for (const auto& c : d_->unit) u.push_back(f(c));
    return Algebra<K2>::from_table(target, dim(), std::move(t), d_->degrees, d_->modulus, d_->labels, u);
  }

 private:
  struct Data {
    K field;
    std::size_t dim;
    std::vector<Elem> table;
    Element unit;
    std::vector<std::string> labels;
    std::vector<std::int64_t> degrees;
    std::int64_t modulus;
  };
  explicit Algebra(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  template <class>
  friend class Algebra;

  std::string witness(std::size_t i, std::size_t j) const { return "(" + label(i) + ", " + label(j) + ")"; }

  Element solve_unit() const {
    // u with u b_j = b_j for all j: dim^2 equations in dim unknowns
    const std::size_t n = dim();
    LinAlg<K> L(field());
    Matrix<K> m = L.zeros(n * n, n);
    Element rhs(n * n, field().zero());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = constant(i, j, k);
        if (j == k) rhs[j * n + k] = field().one();
      }
    auto u = L.solve(m, rhs);
    if (!u) throw EngineError("structure constants admit no unit");
    return *u;
  }

  void validate() const {
    const std::size_t n = dim();
    const K& F = field();
    for (std::size_t j = 0; j < n; ++j) {
      Element b = basis(j);
      if (mul(one(), b) != b || mul(b, one()) != b)
        throw EngineError("unit axiom fails on " + label(j));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool sign = (degree(i) % 2) && (degree(j) % 2);
        for (std::size_t k = 0; k < n; ++k) {
          const Elem& a = constant(i, j, k);
          const Elem& b = constant(j, i, k);
          if (!F.equal(a, sign ? F.neg(b) : b))
            throw EngineError("graded commutativity fails on " + witness(i, j));
          if (!F.is_zero(a) && degree(k) != mod_floor(degree(i) + degree(j), modulus()))
            throw EngineError("degree additivity fails on " + witness(i, j) + " -> " + label(k));
        }
      }
    std::vector<Element> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = mul(basis(i), basis(j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul(prod[i * n + j], basis(k)) != mul(basis(i), prod[j * n + k]))
            throw EngineError("associativity fails on (" + label(i) + ", " + label(j) + ", " + label(k) + ")");
  }

  std::shared_ptr<Data> d_;
};

}  // namespace splitgen
