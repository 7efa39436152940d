#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "splitgen/blocks.hpp"
#include "splitgen/models.hpp"

using namespace splitgen;

namespace {

using E = std::vector<std::uint64_t>;

FiniteField Fp(std::uint64_t p) { return FiniteField::prime(p); }

std::vector<std::string> labels_of(const Algebra<FiniteField>& A) { return A.labels(); }

// Exhaustive checks of the decomposition invariants.
template <class K>
void check_decomposition(const BlockDecomposition<K>& D) {
  const auto& A = D.algebra;
  auto sum = A.zero();
  std::size_t dims = 0;
  for (std::size_t a = 0; a < D.blocks.size(); ++a) {
    const auto& e = D.blocks[a].idempotent;
    ASSERT_EQ(A.mul(e, e), e);
    for (std::size_t b = a + 1; b < D.blocks.size(); ++b) ASSERT_TRUE(A.is_zero(A.mul(e, D.blocks[b].idempotent)));
    sum = A.add(sum, e);
    dims += D.blocks[a].dim();
    for (const auto& x : D.blocks[a].basis) ASSERT_NO_THROW(classify_element(D, a, x));
  }
  ASSERT_EQ(sum, A.one());
  ASSERT_EQ(dims, A.dim());
}

}  // namespace

TEST(Presentation, ProjectivePlane) {
  auto P = qh_cpn(2, Fp(3));
  EXPECT_EQ(P.algebra().dim(), 3u);
  EXPECT_EQ(labels_of(P.algebra()), (std::vector<std::string>{"1", "H", "H^2"}));
  EXPECT_EQ(P.algebra().modulus(), 6);
}

TEST(Presentation, QuadricBasis) {
  auto P = qh_quadric3(Rationals{});
  const auto& A = P.algebra();
  ASSERT_EQ(A.dim(), 4u);
  EXPECT_EQ(A.labels(), (std::vector<std::string>{"1", "H", "E", "HE"}));
  EXPECT_EQ(A.degrees(), (std::vector<std::int64_t>{0, 2, 4, 0}));
  // H^2 = 2E, E^2 = H, H E^2 = H^2 = 2E
  EXPECT_EQ(P.element("H^2"), P.element("2E"));
  EXPECT_EQ(P.element("E^2"), P.element("H"));
  EXPECT_EQ(P.element("HE^2"), P.element("2*E"));
}

TEST(Presentation, EmptyGeneratorList) {
  Presentation<FiniteField> P{Fp(5), 2, {}, {}};
  auto A = algebra_from_presentation(P);
  EXPECT_EQ(A.dim(), 1u);
  EXPECT_EQ(A.one(), E{1});
}

TEST(Presentation, Errors) {
  FiniteField F = Fp(3);
  // infinite quotient, rule not decreasing, inhomogeneous rule
  EXPECT_THROW(algebra_from_presentation(make_presentation(F, 2, {{"x", 0}}, {})), EngineError);
  EXPECT_THROW(algebra_from_presentation(make_presentation(F, 2, {{"x", 0}}, {{"x", "x^2"}})), EngineError);
  EXPECT_THROW(algebra_from_presentation(make_presentation(F, 4, {{"x", 2}}, {{"x^2", "x"}})), EngineError);
  // x^2 y reduces to y^2 = 0 one way and to x the other
  auto bad = make_presentation(F, 2, {{"x", 0}, {"y", 0}}, {{"x^2", "y"}, {"xy", "1"}, {"y^2", "0"}});
  try {
    algebra_from_presentation(bad);
    FAIL() << "expected a confluence failure";
  } catch (const EngineError& e) {
    EXPECT_NE(std::string(e.what()).find("critical pair"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make_presentation(F, 2, {{"x", 0}}, {{"x^2", "z"}}), ParseError);
}

TEST(Presentation, PolynomialParsing) {
  auto P = qh_quadric3(Rationals{});
  auto a = P.element("1/2*H^2 - E + 3");
  EXPECT_EQ(a, P.element("3"));
  EXPECT_THROW(P.element("H +"), ParseError);
  EXPECT_THROW(P.element("Q"), ParseError);
}

TEST(FromTable, GroundField) {
  auto A = Algebra<FiniteField>::from_table(Fp(7), 1, {1}, {0}, 0);
  EXPECT_EQ(A.dim(), 1u);
  EXPECT_EQ(A.one(), E{1});
}

TEST(FromTable, F5Quadratic) {
  // basis 1, H with H^2 = 1, written out by hand
  std::vector<std::uint64_t> t = {1, 0, 0, 1, 0, 1, 1, 0};
  auto A = Algebra<FiniteField>::from_table(Fp(5), 2, t, {0, 2}, 4);
  EXPECT_EQ(A.one(), (E{1, 0}));
  EXPECT_EQ(A.mul(A.basis(1), A.basis(1)), A.one());
}

TEST(FromTable, NonAssociativeWitness) {
  // 1, a, b with a a = b, a b = 0, b b = b: (a a) b = b but a (a b) = 0
  std::vector<std::uint64_t> t(27, 0);
  auto set = [&](int i, int j, int k) { t[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 0, 1);
  set(0, 2, 2);
  set(2, 0, 2);
  set(1, 1, 2);
  set(2, 2, 2);
  try {
    Algebra<FiniteField>::from_table(Fp(3), 3, t, {0, 0, 0}, 0);
    FAIL();
  } catch (const EngineError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
  EXPECT_THROW(Algebra<FiniteField>::from_table(Fp(3), 0, {}, {}, 0), EngineError);
}

TEST(MultOperator, Examples) {
  auto P = qh_cpn(2, Fp(3));
  const auto& A = P.algebra();
  LinAlg<FiniteField> L(A.field());
  EXPECT_EQ(A.mult_operator(A.one()), L.identity(3));
  auto h = A.mult_operator(P.generator("H"));
  // H: 1 -> H, H -> H^2, H^2 -> 1
  EXPECT_EQ(h.data, (E{0, 0, 1, 1, 0, 0, 0, 1, 0}));
  auto Q = qh_quadric3(Fp(2));
  auto e = Q.algebra().mult_operator(Q.generator("E"));
  // columns (E, HE, H, 0)
  EXPECT_EQ(e.data, (E{0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(LinAlg<FiniteField>(Fp(2)).rank(e), 3u);
}

TEST(MinimalPolynomial, Examples) {
  Rationals Q;
  PolyRing<Rationals> R(Q);
  auto quad = qh_quadric3(Q);
  EXPECT_EQ(quad.algebra().minimal_polynomial(quad.algebra().one()), R.from_ints({-1, 1}));
  EXPECT_EQ(quad.algebra().minimal_polynomial(quad.generator("E")), R.from_ints({0, -2, 0, 0, 1}));
  EXPECT_EQ(quad.algebra().minimal_polynomial(quad.generator("H")), R.from_ints({0, -4, 0, 0, 1}));
  for (unsigned n = 1; n <= 6; ++n) {
    auto P = qh_cpn(n, Q);
    std::vector<std::int64_t> c(n + 2, 0);
    c[0] = -1;
    c[n + 1] = 1;
    EXPECT_EQ(P.algebra().minimal_polynomial(P.generator("H")), R.from_ints(c));
  }
}

TEST(JordanChevalley, TrivialCases) {
  auto P = qh_cpn(1, Fp(3));
  const auto& A = P.algebra();
  auto e = P.element("2 + 2H");
  auto jc = jordan_chevalley(A, e);
  EXPECT_EQ(jc.semisimple, e);
  EXPECT_TRUE(A.is_zero(jc.nilpotent));
  auto C = PresentedAlgebra<FiniteField>(make_presentation(Fp(5), 2, {{"x", 0}}, {{"x^3", "0"}}));
  auto x = C.generator("x");
  auto jx = jordan_chevalley(C.algebra(), x);
  EXPECT_TRUE(C.algebra().is_zero(jx.semisimple));
  EXPECT_EQ(jx.nilpotent, x);
}

TEST(JordanChevalley, QuadricEOverF3) {
  auto P = qh_quadric3(Fp(3));
  const auto& A = P.algebra();
  PolyRing<FiniteField> R(A.field());
  auto E = P.generator("E");
  EXPECT_EQ(A.minimal_polynomial(E), R.mul(R.x(), R.pow(R.from_ints({1, 1}), 3)));
  auto jc = jordan_chevalley(A, E);
  auto ms = A.minimal_polynomial(jc.semisimple);
  EXPECT_EQ(ms, R.mul(R.x(), R.from_ints({-2, 1})));  // eigenvalues 0 and 2
  EXPECT_EQ(R.gcd(ms, R.derivative(ms)), R.one());
  EXPECT_TRUE(A.is_zero(A.pow(jc.nilpotent, 4u)));
  EXPECT_EQ(A.add(jc.semisimple, jc.nilpotent), E);
  EXPECT_EQ(A.eval(jc.p, E), jc.semisimple);
  EXPECT_EQ(A.eval(jc.q, E), jc.nilpotent);
}

TEST(JordanChevalley, RandomProperties) {
  std::mt19937 rng(3);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    FiniteField F = Fp(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint64_t> lower;
      unsigned d = 1 + rng() % 6;
      for (unsigned i = 0; i < d; ++i) lower.push_back(rng() % p);
      auto P = corpus::monogenic(F, lower);
      const auto& A = P.algebra();
      auto x = A.zero();
      for (auto& c : x) c = rng() % p;
      auto jc = jordan_chevalley(A, x);
      EXPECT_EQ(A.add(jc.semisimple, jc.nilpotent), x);
      EXPECT_TRUE(A.is_zero(A.pow(jc.nilpotent, A.dim())));
      LinAlg<FiniteField> L(F);
      auto S = A.mult_operator(jc.semisimple), N = A.mult_operator(jc.nilpotent);
      EXPECT_EQ(L.mul(S, N), L.mul(N, S));
      PolyRing<FiniteField> R(F);
      auto ms = A.minimal_polynomial(jc.semisimple);
      EXPECT_EQ(R.gcd(ms, R.derivative(ms)), R.one());
    }
  }
}

TEST(BlockDecompose, QuadricTable) {
  auto d3 = block_decompose(qh_quadric3(Fp(3)).algebra());
  ASSERT_EQ(d3.blocks.size(), 2u);
  std::multiset<std::size_t> dims;
  for (const auto& b : d3.blocks) dims.insert(b.dim());
  EXPECT_EQ(dims, (std::multiset<std::size_t>{1, 3}));
  for (const auto& b : d3.blocks) EXPECT_EQ(b.is_field, b.dim() == 1);
  check_decomposition(d3);

  auto d2 = block_decompose(qh_quadric3(Fp(2)).algebra());
  ASSERT_EQ(d2.blocks.size(), 1u);
  EXPECT_EQ(d2.blocks[0].radical_dim, 3u);
  check_decomposition(d2);

  auto d5 = block_decompose(qh_quadric3(Fp(5)).algebra(), true);
  ASSERT_EQ(d5.blocks.size(), 4u);
  for (const auto& b : d5.blocks) EXPECT_TRUE(b.is_field);
  EXPECT_TRUE(d5.extended);
  check_decomposition(d5);
}

TEST(BlockDecompose, ProjectiveSpaces) {
  auto d = block_decompose(qh_cpn(5, Fp(2)).algebra());
  EXPECT_EQ(d.blocks.size(), 2u);
  check_decomposition(d);
  auto e = block_decompose(qh_cpn(5, Fp(2)).algebra(), true);
  EXPECT_EQ(e.extension_used(), field_make(2, 2));
  ASSERT_EQ(e.blocks.size(), 3u);
  for (const auto& b : e.blocks) EXPECT_EQ(b.dim(), 2u);
  check_decomposition(e);
  EXPECT_EQ(block_decompose(qh_cpn(2, Fp(3)).algebra()).blocks.size(), 1u);
  auto f = block_decompose(qh_cpn(4, Fp(7)).algebra(), true);
  EXPECT_EQ(f.blocks.size(), 5u);
  for (const auto& b : f.blocks) EXPECT_TRUE(b.is_field);
}

TEST(BlockDecompose, GroundFieldAndIdempotence) {
  auto A = Algebra<FiniteField>::from_table(Fp(2), 1, {1}, {0}, 0);
  auto d = block_decompose(A);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_TRUE(d.blocks[0].is_field);
  // decomposing a block algebra gives one block
  auto q = block_decompose(qh_quadric3(Fp(3)).algebra());
  for (const auto& b : q.blocks) {
    auto sub = block_algebra(q, &b - &q.blocks[0]);
    EXPECT_EQ(block_decompose(sub).blocks.size(), 1u);
  }
}

TEST(BlockDecompose, RationalResidueFields) {
  Rationals Q;
  auto d = block_decompose(qh_quadric3(Q).algebra());
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].residue_degree, 1u);
  EXPECT_EQ(d.blocks[0].dim(), 1u);
  EXPECT_EQ(d.blocks[1].residue_degree, 3u);
  EXPECT_TRUE(d.blocks[1].is_field);
  check_decomposition(d);
  auto c = block_decompose(qh_cpn(1, Q).algebra());
  EXPECT_EQ(c.blocks.size(), 2u);
  EXPECT_THROW(block_decompose(qh_cpn(4, Q).algebra()), EngineError);
}

TEST(BlockDecompose, ExtensionCap) {
  EXPECT_THROW(block_decompose(qh_cpn(10, Fp(2)).algebra(), true, 4), EngineError);
  EXPECT_NO_THROW(block_decompose(qh_cpn(10, Fp(2)).algebra(), true, 10));
}

TEST(BlockDecompose, NonsplitWithoutExtension) {
  // F_2[x, y]/(x^2 + x + 1, y^2 + y + 1) = F_4 x F_4: two blocks although each generator alone is a field
  auto P = PresentedAlgebra<FiniteField>(
      make_presentation(Fp(2), 2, {{"x", 0}, {"y", 0}}, {{"x^2", "x + 1"}, {"y^2", "y + 1"}}));
  auto d = block_decompose(P.algebra());
  ASSERT_EQ(d.blocks.size(), 2u);
  for (const auto& b : d.blocks) {
    EXPECT_EQ(b.dim(), 2u);
    EXPECT_EQ(b.residue_degree, 2u);
  }
  check_decomposition(d);
  EXPECT_EQ(block_decompose(P.algebra(), true).blocks.size(), 4u);
}

TEST(Classify, Examples) {
  auto Q2 = qh_quadric3(Fp(2));
  auto d = block_decompose(Q2.algebra());
  auto c = classify_element(d, 0, Q2.generator("E"));
  ASSERT_TRUE(std::holds_alternative<Nilpotent<FiniteField>>(c));
  EXPECT_EQ(std::get<Nilpotent<FiniteField>>(c).index, 4u);

  auto cp = qh_cpn(4, Fp(7));
  auto dc = block_decompose(cp.algebra(), true);
  const auto& A = dc.algebra;
  auto H = dc.lift(cp.generator("H"));
  for (std::size_t a = 0; a < dc.blocks.size(); ++a) {
    const auto& e = dc.blocks[a].idempotent;
    auto ce = classify_element(dc, a, e);
    ASSERT_TRUE(std::holds_alternative<Invertible<FiniteField>>(ce));
    EXPECT_EQ(std::get<Invertible<FiniteField>>(ce).inverse, e);
    auto ch = classify_element(dc, a, A.mul(H, e));
    ASSERT_TRUE(std::holds_alternative<Invertible<FiniteField>>(ch));
    EXPECT_EQ(std::get<Invertible<FiniteField>>(ch).inverse, A.mul(A.pow(H, 4u), e));
  }
  auto cz = classify_element(d, 0, Q2.algebra().zero());
  ASSERT_TRUE(std::holds_alternative<Nilpotent<FiniteField>>(cz));
  EXPECT_EQ(std::get<Nilpotent<FiniteField>>(cz).index, 1u);
}

TEST(Classify, NonscalarInverseAndNonlocalInput) {
  // over Q the degree-3 residue block needs the residue-field inverse
  Rationals Q;
  auto P = qh_quadric3(Q);
  auto d = block_decompose(P.algebra());
  const auto& A = d.algebra;
  const auto& e = d.blocks[1].idempotent;
  auto x = A.mul(e, A.add(P.generator("E"), A.scalar(mpq_class(1, 3))));
  auto c = classify_element(d, 1, x);
  ASSERT_TRUE(std::holds_alternative<Invertible<Rationals>>(c));
  EXPECT_EQ(A.mul(x, std::get<Invertible<Rationals>>(c).inverse), e);
  auto cpn = qh_cpn(5, Fp(2));
  auto dd = block_decompose(cpn.algebra());
  EXPECT_THROW(classify_element(dd, 0, cpn.generator("H")), EngineError);  // not in the block
}

TEST(Classify, MixedParity) {
  // exterior algebra on an odd generator over an even polynomial part
  auto P = PresentedAlgebra<FiniteField>(
      make_presentation(Fp(5), 4, {{"u", 2}, {"z", 1}}, {{"u^2", "1"}, {"z^2", "0"}}));
  auto d = block_decompose(P.algebra());
  ASSERT_EQ(d.blocks.size(), 2u);
  const auto& A = d.algebra;
  for (std::size_t a = 0; a < 2; ++a) {
    const auto& e = d.blocks[a].idempotent;
    EXPECT_FALSE(d.blocks[a].is_field);
    EXPECT_EQ(d.blocks[a].radical_dim, 1u);
    auto x = A.mul(e, A.add(P.element("2 + u"), P.generator("z")));
    auto c = classify_element(d, a, x);
    ASSERT_TRUE(std::holds_alternative<Invertible<FiniteField>>(c));
    auto z = A.mul(e, P.generator("z"));
    auto cz = classify_element(d, a, z);
    ASSERT_TRUE(std::holds_alternative<Nilpotent<FiniteField>>(cz));
    EXPECT_EQ(std::get<Nilpotent<FiniteField>>(cz).index, 2u);
  }
}

TEST(Radical, Examples) {
  auto a = qh_cpn(1, Fp(5));  // F5[H]/(H^2 - 1)
  EXPECT_TRUE(radical(a.algebra()).empty());
  auto b = qh_cpn(1, Fp(2));
  auto r = radical(b.algebra());
  ASSERT_EQ(r.size(), 1u);
  LinAlg<FiniteField> L(Fp(2));
  EXPECT_EQ(L.rank(L.from_columns({r[0], b.element("H + 1")}, 2)), 1u);
  EXPECT_TRUE(radical(Algebra<FiniteField>::from_table(Fp(3), 1, {1}, {0}, 0)).empty());
}

TEST(BruteForce, PrimitiveIdempotentsMatchOracle) {
  auto run = [](const Algebra<FiniteField>& A, bool& ok) {
    const std::int64_t p = static_cast<std::int64_t>(A.field().characteristic());
    auto mult = [&](std::size_t i, std::size_t j) {
      std::vector<std::int64_t> r;
      for (auto c : A.mul(A.basis(i), A.basis(j))) r.push_back(static_cast<std::int64_t>(c));
      return r;
    };
    auto prod = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
      E a(x.begin(), x.end()), b(y.begin(), y.end());
      auto c = A.mul(a, b);
      return std::vector<std::int64_t>(c.begin(), c.end());
    };
    auto idem = oracle::all_idempotents(A.dim(), p, mult);
    auto expect = oracle::primitive_idempotents(idem, p, prod);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& b : block_decompose(A).blocks) got.insert(std::vector<std::int64_t>(b.idempotent.begin(), b.idempotent.end()));
    ok = got == expect;
  };
  for (std::uint64_t p : {2u, 3u}) {
    for (const auto& P : corpus::all_monogenic(Fp(p), 4)) {
      bool ok = false;
      run(P.algebra(), ok);
      EXPECT_TRUE(ok) << "p=" << p << " dim=" << P.algebra().dim();
    }
    for (const auto& A : corpus::two_variable(Fp(p))) {
      bool ok = false;
      run(A, ok);
      EXPECT_TRUE(ok);
    }
  }
}
