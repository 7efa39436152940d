#pragma once

// Dense univariate polynomials over an exact field.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "splitgen/field.hpp"

namespace splitgen {

/// Coefficients low to high, no trailing zeros (the zero polynomial is empty).
template <class K>
struct UniPoly {
  std::vector<typename K::Element> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const typename K::Element& lead() const { return coeffs.back(); }
  bool operator==(const UniPoly&) const = default;
};

template <class K>
class PolyRing {
 public:
  using Elem = typename K::Element;
  using Poly = UniPoly<K>;

  explicit PolyRing(K field) : K_(std::move(field)) {}
  const K& field() const { return K_; }

  Poly zero() const { return {}; }
  Poly one() const { return constant(K_.one()); }
  Poly constant(const Elem& c) const { return trim(Poly{{c}}); }
  /// lambda - c
  Poly linear(const Elem& root) const { return Poly{{K_.neg(root), K_.one()}}; }
  Poly x() const { return Poly{{K_.zero(), K_.one()}}; }
  Poly monomial(const Elem& c, std::size_t deg) const {
    Poly f;
    f.coeffs.assign(deg + 1, K_.zero());
    f.coeffs[deg] = c;
    return trim(std::move(f));
  }
  Poly from_ints(const std::vector<std::int64_t>& c) const {
    Poly f;
    for (auto v : c) f.coeffs.push_back(K_.from_int(v));
    return trim(std::move(f));
  }

  Poly trim(Poly f) const {
    while (!f.coeffs.empty() && K_.is_zero(f.coeffs.back())) f.coeffs.pop_back();
    return f;
  }

  bool is_one(const Poly& f) const { return f.coeffs.size() == 1 && K_.is_one(f.coeffs[0]); }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), K_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = K_.add(r.coeffs[i], b.coeffs[i]);
    return trim(std::move(r));
  }
  Poly neg(const Poly& a) const {
    Poly r = a;
    for (auto& c : r.coeffs) c = K_.neg(c);
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }
  Poly scale(const Poly& a, const Elem& c) const {
    Poly r = a;
    for (auto& v : r.coeffs) v = K_.mul(v, c);
    return trim(std::move(r));
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, K_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (K_.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[i + j] = K_.add(r.coeffs[i + j], K_.mul(a.coeffs[i], b.coeffs[j]));
    }
    return trim(std::move(r));
  }
  Poly pow(Poly a, unsigned e) const {
    Poly r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw EngineError("polynomial division by zero");
    Poly r = a, q;
    if (a.degree() < b.degree()) return {q, r};
    q.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), K_.zero());
    Elem inv_lead = K_.inv(b.lead());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Elem c = K_.mul(r.coeffs[static_cast<std::size_t>(k + b.degree())], inv_lead);
      q.coeffs[static_cast<std::size_t>(k)] = c;
      if (K_.is_zero(c)) continue;
      for (int i = 0; i <= b.degree(); ++i) {
        auto& slot = r.coeffs[static_cast<std::size_t>(k + i)];
        slot = K_.sub(slot, K_.mul(c, b.coeffs[static_cast<std::size_t>(i)]));
      }
    }
    return {trim(std::move(q)), trim(std::move(r))};
  }
  Poly div(const Poly& a, const Poly& b) const { return divmod(a, b).first; }
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  bool divides(const Poly& d, const Poly& a) const { return mod(a, d).is_zero(); }

  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, K_.inv(a.lead()));
  }

  /// Monic gcd (zero only if both inputs are zero).
  Poly gcd(Poly a, Poly b) const {
    while (!b.is_zero()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
  std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem c = K_.inv(r0.lead());
    return {scale(r0, c), scale(s0, c), scale(t0, c)};
  }

  Poly derivative(const Poly& a) const {
    Poly r;
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
      r.coeffs.push_back(K_.mul(K_.from_int(static_cast<std::int64_t>(i)), a.coeffs[i]));
    return trim(std::move(r));
  }

  Elem eval(const Poly& a, const Elem& x) const {
    Elem r = K_.zero();
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) r = K_.add(K_.mul(r, x), *it);
    return r;
  }

  /// a^e mod m for a large exponent.
  template <class Exp>
  Poly powmod(Poly a, Exp e, const Poly& m) const {
    Poly r = mod(one(), m);
    a = mod(a, m);
    while (e > 0) {
      if (e % 2 == 1) r = mod(mul(r, a), m);
      e /= 2;
      if (e > 0) a = mod(mul(a, a), m);
    }
    return r;
  }

  /// f(g(x)) mod m.
  Poly compose_mod(const Poly& f, const Poly& g, const Poly& m) const {
    Poly r;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) r = mod(add(mul(r, g), constant(*it)), m);
    return r;
  }

  /// Canonical order: by degree, then coefficients from the top down.
  bool less(const Poly& a, const Poly& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      const auto& x = a.coeffs[static_cast<std::size_t>(i)];
      const auto& y = b.coeffs[static_cast<std::size_t>(i)];
      if (K_.less(x, y)) return true;
      if (K_.less(y, x)) return false;
    }
    return false;
  }

  std::string format(const Poly& a, const std::string& var = "x") const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
      const auto& c = a.coeffs[static_cast<std::size_t>(i)];
      if (K_.is_zero(c)) continue;
      std::string cs = K_.format(c);
      bool compound = cs.find_first_of("+t") != std::string::npos || cs.find('-', 1) != std::string::npos;
      if (!first) {
        if (cs[0] == '-' && !compound) {
          os << " - ";
          cs = cs.substr(1);
        } else {
          os << " + ";
        }
      }
      first = false;
      if (compound) cs = "(" + cs + ")";
      if (i == 0) {
        os << cs;
        continue;
      }
      if (cs == "-1") os << "-";
      else if (cs != "1") os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  K K_;
};

}  // namespace splitgen
