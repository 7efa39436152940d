#pragma once

// Exact ground fields: the rationals and finite fields F_{p^d}.
//
// Elements are plain values; every operation goes through the field object,
// in the style of the fflas/NTL "domain" classes.  A FiniteField element is the
// integer whose base-p digits are the coefficients of its polynomial
// representative (degree < d) modulo the field's defining polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "splitgen/error.hpp"

namespace splitgen {

namespace nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Trial division; adequate at the scale of characteristics used here.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

/// Distinct prime factors, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / gcd(a, b) * b; }

/// p^d, or 0 if it does not fit below 2^62.
inline std::uint64_t checked_power(std::uint64_t p, unsigned d) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) return 0;
    q *= p;
  }
  return q;
}

}  // namespace nt

/// Characteristic, extension degree and defining polynomial of a field.
struct FieldSpec {
  std::uint64_t characteristic = 0;
  unsigned degree = 1;
  // Monic defining polynomial over F_p, coefficients low to high (size degree+1).
  // Empty for prime fields and the rationals.
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldSpec&) const = default;

  std::string name() const {
    if (characteristic == 0) return "Q";
    std::ostringstream os;
    os << "F_" << characteristic;
    if (degree > 1) {
      os << "^" << degree << "[t]/(";
      bool first = true;
      for (int i = static_cast<int>(modulus.size()) - 1; i >= 0; --i) {
        std::uint64_t c = modulus[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (c != 1 && i > 0) os << "*";
        if (i > 1) os << "t^" << i;
        else if (i == 1) os << "t";
      }
      os << ")";
    }
    return os.str();
  }
};

/// The field of rational numbers with GMP arbitrary-precision fractions.
class Rationals {
 public:
  using Element = mpq_class;
  static constexpr bool finite = false;

  Rationals() = default;
  explicit Rationals(const FieldSpec& spec) {
    if (spec.characteristic != 0) throw EngineError("Rationals constructed from a finite field spec");
  }

  FieldSpec spec() const { return FieldSpec{}; }
  std::uint64_t characteristic() const { return 0; }
  unsigned degree() const { return 1; }
  std::string name() const { return "Q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw EngineError("zero denominator");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw EngineError("inversion of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  Element pow(Element a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Element r(1);
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  /// Canonical total order used to sort outputs deterministically.
  bool less(const Element& a, const Element& b) const { return a < b; }

  std::string format(const Element& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const { return true; }
};

/// F_{p^d} with p < 2^31 and p^d < 2^62.
class FiniteField {
 public:
  using Element = std::uint64_t;
  static constexpr bool finite = true;

  explicit FiniteField(const FieldSpec& spec) : impl_(std::make_shared<Impl>()) {
    Impl& m = *impl_;
    if (spec.characteristic == 0) throw EngineError("FiniteField constructed from characteristic 0");
    if (!nt::is_prime(spec.characteristic)) throw EngineError("characteristic is not prime");
    if (spec.characteristic >= (std::uint64_t{1} << 31)) throw EngineError("characteristic too large");
    if (spec.degree == 0) throw EngineError("extension degree must be positive");
    if (spec.degree > 1 && spec.modulus.size() != spec.degree + 1)
      throw EngineError("extension field needs a modulus of matching degree");
    m.spec = spec;
    m.p = spec.characteristic;
    m.d = spec.degree;
    m.q = nt::checked_power(m.p, m.d);
    if (m.q == 0) throw EngineError("extension too large");
    if (m.d > 1 && spec.modulus.back() != 1) throw EngineError("modulus must be monic");
    p_ = m.p;
    d_ = m.d;
    q_ = m.q;
    if (d_ > 1 && q_ <= kTableLimit) build_tables();
  }

  static FiniteField prime(std::uint64_t p) { return FiniteField(FieldSpec{p, 1, {}}); }

  const FieldSpec& spec() const { return impl_->spec; }
  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return d_; }
  std::uint64_t order() const { return q_; }
  std::string name() const { return impl_->spec.name(); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Element>(r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw EngineError("denominator vanishes in characteristic " + std::to_string(p_));
    return mul(from_mpz(num), inv(d));
  }

  /// The class of t in F_p[t]/(modulus); requires degree > 1.
  Element generator() const {
    if (d_ == 1) throw EngineError("prime field has no polynomial generator");
    return p_;
  }

  std::vector<std::uint64_t> coeffs(Element a) const {
    std::vector<std::uint64_t> c(d_);
    for (unsigned i = 0; i < d_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }
  Element from_coeffs(const std::vector<std::uint64_t>& c) const {
    Element a = 0;
    for (int i = static_cast<int>(std::min<std::size_t>(c.size(), d_)) - 1; i >= 0; --i)
      a = a * p_ + c[static_cast<std::size_t>(i)] % p_;
    return a;
  }

  Element add(Element a, Element b) const {
    if (d_ == 1) {
      Element s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    Element r = 0, scale = 1;
    for (unsigned i = 0; i < d_; ++i) {
      Element s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * scale;
      scale *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }
  Element neg(Element a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    Element r = 0, scale = 1;
    for (unsigned i = 0; i < d_; ++i) {
      Element c = a % p_;
      r += (c == 0 ? 0 : p_ - c) * scale;
      scale *= p_;
      a /= p_;
    }
    return r;
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (d_ == 1) return a * b % p_;
    if (a == 0 || b == 0) return 0;
    if (!impl_->log.empty()) {
      const Impl& m = *impl_;
      return m.exp[m.log[a] + m.log[b]];
    }
    return slow_mul(a, b);
  }
  Element inv(Element a) const {
    if (a == 0) throw EngineError("inversion of zero");
    if (d_ == 1) return nt::powmod(a, p_ - 2, p_);
    if (!impl_->log.empty()) {
      const Impl& m = *impl_;
      std::uint64_t l = m.log[a];
      return m.exp[l == 0 ? 0 : (q_ - 1) - l];
    }
    return pow(a, static_cast<std::int64_t>(q_ - 2));
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    return pow_u(a, static_cast<std::uint64_t>(e));
  }
  Element pow_u(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// The unique p-th root (inverse Frobenius).
  Element pth_root(Element a) const {
    if (d_ == 1) return a;
    return pow_u(a, q_ / p_);
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  bool less(Element a, Element b) const { return a < b; }

  /// Smallest (as an integer code) generator of the multiplicative group.
  Element primitive_element() const {
    if (q_ == 2) return 1;
    auto factors = nt::prime_factors(q_ - 1);
    for (Element g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto l : factors) {
        if (pow_u(g, (q_ - 1) / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    throw EngineError("no primitive element found");
  }

  std::string format(Element a) const {
    if (d_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(d_) - 1; i >= 0; --i) {
      auto ci = c[static_cast<std::size_t>(i)];
      if (ci == 0) continue;
      if (!first) os << "+";
      first = false;
      if (ci != 1 || i == 0) os << ci;
      if (ci != 1 && i > 0) os << "*";
      if (i > 1) os << "t^" << i;
      else if (i == 1) os << "t";
    }
    return os.str();
  }

  bool operator==(const FiniteField& o) const { return impl_ == o.impl_ || impl_->spec == o.impl_->spec; }

 private:
  static constexpr std::uint64_t kTableLimit = 1u << 16;

  struct Impl {
    FieldSpec spec;
    std::uint64_t p = 0, q = 0;
    unsigned d = 1;
    std::vector<std::uint32_t> log, exp;
  };

  Element slow_mul(Element a, Element b) const {
    const auto& mod = impl_->spec.modulus;
    std::uint64_t ac[64], bc[64], r[128] = {};
    for (unsigned i = 0; i < d_; ++i) {
      ac[i] = a % p_;
      a /= p_;
      bc[i] = b % p_;
      b /= p_;
    }
    for (unsigned i = 0; i < d_; ++i) {
      if (ac[i] == 0) continue;
      for (unsigned j = 0; j < d_; ++j) r[i + j] = (r[i + j] + ac[i] * bc[j]) % p_;
    }
    for (int k = 2 * static_cast<int>(d_) - 2; k >= static_cast<int>(d_); --k) {
      std::uint64_t c = r[k];
      if (c == 0) continue;
      r[k] = 0;
      for (unsigned i = 0; i < d_; ++i)
        r[k - static_cast<int>(d_) + static_cast<int>(i)] =
            (r[k - static_cast<int>(d_) + static_cast<int>(i)] + (p_ - c) * mod[i]) % p_;
    }
    Element out = 0;
    for (int i = static_cast<int>(d_) - 1; i >= 0; --i) out = out * p_ + r[i];
    return out;
  }

  void build_tables() {
    Impl& m = *impl_;
    auto factors = nt::prime_factors(q_ - 1);
    auto slow_pow = [&](Element a, std::uint64_t e) {
      Element r = 1;
      while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
      }
      return r;
    };
    Element g = 0;
    for (Element c = 2; c < q_; ++c) {
      bool ok = true;
      for (auto l : factors)
        if (slow_pow(c, (q_ - 1) / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = c;
        break;
      }
    }
    if (g == 0) throw EngineError("modulus is not irreducible (no primitive element)");
    m.log.assign(q_, 0);
    m.exp.assign(2 * (q_ - 1), 0);
    Element x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      m.exp[i] = static_cast<std::uint32_t>(x);
      m.exp[i + q_ - 1] = static_cast<std::uint32_t>(x);
      m.log[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, g);
    }
  }

  std::shared_ptr<Impl> impl_;
  std::uint64_t p_ = 0, q_ = 0;
  unsigned d_ = 1;
};

/// A scalar bundled with its field, for call sites that want checked mixing.
template <class K>
class Scalar {
 public:
  using Element = typename K::Element;
  Scalar(K field, Element v) : field_(std::move(field)), v_(std::move(v)) {}

  const K& field() const { return field_; }
  const Element& value() const { return v_; }

  Scalar operator+(const Scalar& o) const { return {check(o), field_.add(v_, o.v_)}; }
  Scalar operator-(const Scalar& o) const { return {check(o), field_.sub(v_, o.v_)}; }
  Scalar operator*(const Scalar& o) const { return {check(o), field_.mul(v_, o.v_)}; }
  Scalar operator-() const { return {field_, field_.neg(v_)}; }
  Scalar inverse() const { return {field_, field_.inv(v_)}; }
  Scalar pow(std::int64_t e) const { return {field_, field_.pow(v_, e)}; }
  bool operator==(const Scalar& o) const { return check(o).equal(v_, o.v_); }
  std::string str() const { return field_.format(v_); }

 private:
  const K& check(const Scalar& o) const {
    if (!(field_ == o.field_)) throw EngineError("mixed fields in scalar arithmetic");
    return field_;
  }
  K field_;
  Element v_;
};

}  // namespace splitgen
