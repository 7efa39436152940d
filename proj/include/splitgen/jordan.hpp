#pragma once

// Jordan-Chevalley decomposition x = x_s + x_n inside a commutative algebra.

#include <bit>
#include <cstddef>

#include "splitgen/algebra.hpp"
#include "splitgen/factor.hpp"

namespace splitgen {

template <class K>
struct JordanChevalley {
  typename Algebra<K>::Element semisimple, nilpotent;
  UniPoly<K> p, q;  // semisimple = p(x), nilpotent = q(x)
};

/// Newton iteration z <- z - f(z)/f'(z) from z = x, with f the squarefree part
/// of the minimal polynomial.  `unit` restricts everything to a block.
template <class K>
JordanChevalley<K> jordan_chevalley(const Algebra<K>& A, const typename Algebra<K>::Element& x,
                                    const typename Algebra<K>::Element* unit = nullptr) {
  using Element = typename Algebra<K>::Element;
  const Element& u = unit ? *unit : A.one();
  const K& F = A.field();
  PolyRing<K> R(F);
  LinAlg<K> L(F);
  UniPoly<K> mp = A.minimal_polynomial(x, &u);
  UniPoly<K> f = squarefree_part(F, mp);
  UniPoly<K> df = R.derivative(f);
  Element z = x;
  const unsigned steps = static_cast<unsigned>(std::bit_width(A.dim())) + 1;
  for (unsigned k = 0; k < steps; ++k) {
    Element fz = A.eval(f, z, &u);
    if (A.is_zero(fz)) break;
    auto inv = A.inverse(A.eval(df, z, &u), &u);
    if (!inv) throw EngineError("internal: derivative not invertible in Newton step");
    z = A.sub(z, A.mul(fz, *inv));
  }
  if (!A.is_zero(A.eval(f, z, &u))) throw EngineError("internal: Newton iteration did not converge");

  // express z in the Krylov basis u, x, x^2, ... to recover p
  std::vector<Element> powers{u};
  for (int i = 1; i < mp.degree(); ++i) powers.push_back(A.mul(powers.back(), x));
  auto c = L.solve(L.from_columns(powers, A.dim()), z);
  if (!c) throw EngineError("internal: semisimple part is not a polynomial in x");
  JordanChevalley<K> out;
  out.p = R.trim(UniPoly<K>{*c});
  out.q = R.sub(R.x(), out.p);
  out.semisimple = z;
  out.nilpotent = A.sub(x, z);
  return out;
}

/// Least m >= 1 with x^m = 0, or 0 if x is not nilpotent.
template <class K>
std::size_t nilpotency_index(const Algebra<K>& A, const typename Algebra<K>::Element& x) {
  auto y = x;
  for (std::size_t m = 1; m <= A.dim() + 1; ++m) {
    if (A.is_zero(y)) return m;
    y = A.mul(y, x);
  }
  return 0;
}

}  // namespace splitgen
