#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "splitgen/factor.hpp"

using namespace splitgen;

namespace {

UniPoly<FiniteField> to_poly(const FiniteField& F, const oracle::IntPoly& f) {
  PolyRing<FiniteField> R(F);
  return R.from_ints(f);
}

oracle::IntPoly to_ints(const UniPoly<FiniteField>& f) {
  oracle::IntPoly out;
  for (auto c : f.coeffs) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

}  // namespace

TEST(FieldMake, RationalsAndPrimeFields) {
  EXPECT_EQ(field_make(0, 1), FieldSpec{});
  FieldSpec f3 = field_make(3, 1);
  EXPECT_EQ(f3.characteristic, 3u);
  EXPECT_EQ(f3.degree, 1u);
  EXPECT_TRUE(f3.modulus.empty());
}

TEST(FieldMake, F4Modulus) {
  FieldSpec s = field_make(2, 2);
  EXPECT_EQ(s.modulus, (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(s.name(), "F_2^2[t]/(t^2+t+1)");
}

TEST(FieldMake, MatchesTrialDivisionOracle) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned d = 2; d <= (p == 2 ? 8u : 4u); ++d) {
      FieldSpec s = field_make(p, d);
      auto expect = oracle::least_irreducible(static_cast<std::int64_t>(p), static_cast<int>(d));
      oracle::IntPoly got(s.modulus.begin(), s.modulus.end());
      EXPECT_EQ(got, expect) << "p=" << p << " d=" << d;
    }
  }
}

TEST(FieldMake, Deterministic) { EXPECT_EQ(field_make(3, 5), field_make(3, 5)); }

TEST(FieldMake, Errors) {
  EXPECT_THROW(field_make(4, 1), EngineError);
  EXPECT_THROW(field_make(0, 2), EngineError);
  EXPECT_THROW(field_make(2, 13), EngineError);
  EXPECT_NO_THROW(field_make(2, 13, 13));
}

TEST(ScalarArith, SmallExamples) {
  FiniteField F2 = FiniteField::prime(2), F3 = FiniteField::prime(3);
  FiniteField F4(field_make(2, 2));
  EXPECT_EQ(F2.inv(F2.from_int(3)), 1u);
  EXPECT_EQ(F3.inv(2), 2u);
  auto w = F4.generator();
  EXPECT_NE(F4.pow(w, 1), 1u);
  EXPECT_EQ(F4.pow(w, 3), 1u);
  EXPECT_THROW(F3.inv(0), EngineError);
  Rationals Q;
  EXPECT_EQ(Q.inv(Q.from_int(3)), mpq_class(1, 3));
  EXPECT_THROW(Q.inv(0), EngineError);
}

TEST(ScalarArith, MixedFieldsRejected) {
  FiniteField F3 = FiniteField::prime(3), F5 = FiniteField::prime(5);
  Scalar<FiniteField> a(F3, 1), b(F5, 1);
  EXPECT_THROW(a + b, EngineError);
  EXPECT_EQ((a + a).value(), 2u);
}

TEST(ScalarArith, InverseIdentityEverywhere) {
  for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {2, 6}}) {
    FiniteField F(field_make(p, d));
    for (std::uint64_t a = 1; a < F.order(); ++a) ASSERT_EQ(F.mul(a, F.inv(a)), 1u) << F.name() << " a=" << a;
  }
}

TEST(ScalarArith, LargeFieldWithoutTables) {
  FiniteField F(field_make(2, 20, 20));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t a = 1 + rng() % (F.order() - 1), b = 1 + rng() % (F.order() - 1);
    EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    EXPECT_EQ(F.mul(F.mul(a, b), F.inv(b)), a);
    EXPECT_EQ(F.pth_root(F.mul(a, a)), a);
  }
}

TEST(PolyFactor, QuadricCharPolyOfH) {
  FiniteField F2 = FiniteField::prime(2), F3 = FiniteField::prime(3);
  oracle::IntPoly f = {0, -4, 0, 0, 1};  // lambda(lambda^3 - 4)
  auto r2 = poly_factor(F2, to_poly(F2, f));
  ASSERT_EQ(r2.factors.size(), 1u);
  EXPECT_EQ(to_ints(r2.factors[0].first), (oracle::IntPoly{0, 1}));
  EXPECT_EQ(r2.factors[0].second, 4u);
  auto r3 = poly_factor(F3, to_poly(F3, f));
  ASSERT_EQ(r3.factors.size(), 2u);
  EXPECT_EQ(to_ints(r3.factors[0].first), (oracle::IntPoly{0, 1}));
  EXPECT_EQ(r3.factors[0].second, 1u);
  EXPECT_EQ(to_ints(r3.factors[1].first), (oracle::IntPoly{2, 1}));
  EXPECT_EQ(r3.factors[1].second, 3u);
}

TEST(PolyFactor, SquareOfLambda) {
  Rationals Q;
  PolyRing<Rationals> R(Q);
  auto r = poly_factor(Q, R.from_ints({0, 0, 1}));
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_EQ(r.factors[0].first, R.x());
  EXPECT_EQ(r.factors[0].second, 2u);
  EXPECT_TRUE(r.complete);
}

TEST(PolyFactor, RationalCases) {
  Rationals Q;
  PolyRing<Rationals> R(Q);
  // lambda (lambda^3 - 2): cubic part has no rational root, so it is irreducible
  auto a = poly_factor(Q, R.from_ints({0, -2, 0, 0, 1}));
  EXPECT_TRUE(a.complete);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[1].first.degree(), 3);
  // (2x - 1)(x + 3)^2
  auto b = poly_factor(Q, R.mul(R.from_ints({-1, 2}), R.pow(R.from_ints({3, 1}), 2)));
  ASSERT_EQ(b.factors.size(), 2u);
  // canonical order compares constant terms: -1/2 before 3
  EXPECT_EQ(b.factors[0].first, R.linear(mpq_class(1, 2)));
  EXPECT_EQ(b.factors[0].second, 1u);
  EXPECT_EQ(b.factors[1].first, R.linear(mpq_class(-3)));
  EXPECT_EQ(b.factors[1].second, 2u);
  // x^4 + 1 cannot be certified without number-field factoring
  auto c = poly_factor(Q, R.from_ints({1, 0, 0, 0, 1}));
  EXPECT_FALSE(c.complete);
}

TEST(PolyFactor, ExtensionField) {
  FiniteField F4(field_make(2, 2));
  PolyRing<FiniteField> R(F4);
  // x^3 - 1 splits into linear factors over F4
  auto r = poly_factor(F4, R.from_ints({-1, 0, 0, 1}));
  ASSERT_EQ(r.factors.size(), 3u);
  for (const auto& [g, m] : r.factors) {
    EXPECT_EQ(g.degree(), 1);
    EXPECT_EQ(m, 1u);
  }
  // x^5 - 1 over F4: (x - 1) times two quadratics
  auto s = poly_factor(F4, R.from_ints({-1, 0, 0, 0, 0, 1}));
  ASSERT_EQ(s.factors.size(), 3u);
  EXPECT_EQ(s.factors[0].first.degree(), 1);
  EXPECT_EQ(s.factors[1].first.degree(), 2);
  EXPECT_EQ(s.factors[2].first.degree(), 2);
}

TEST(PolyFactor, MatchesTrialDivisionOracle) {
  std::mt19937 rng(12345);
  for (std::int64_t p : {2, 3, 5}) {
    FiniteField F = FiniteField::prime(static_cast<std::uint64_t>(p));
    PolyRing<FiniteField> R(F);
    for (int trial = 0; trial < 200; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 8);
      oracle::IntPoly f;
      for (int i = 0; i < deg; ++i) f.push_back(static_cast<std::int64_t>(rng() % static_cast<unsigned>(p)));
      f.push_back(1);
      auto got = poly_factor(F, to_poly(F, f));
      std::map<oracle::IntPoly, int> as_map;
      UniPoly<FiniteField> prod = R.one();
      for (const auto& [g, m] : got.factors) {
        as_map[to_ints(g)] += static_cast<int>(m);
        prod = R.mul(prod, R.pow(g, m));
        EXPECT_TRUE(oracle::irreducible(to_ints(g), p));
      }
      EXPECT_EQ(prod, to_poly(F, f));
      EXPECT_EQ(as_map, oracle::factor(f, p));
      for (std::size_t i = 1; i < got.factors.size(); ++i)
        EXPECT_TRUE(R.less(got.factors[i - 1].first, got.factors[i].first));
    }
  }
}

TEST(PolyFactor, RandomProductsOverExtensions) {
  std::mt19937 rng(99);
  for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    FiniteField F(field_make(p, d));
    PolyRing<FiniteField> R(F);
    for (int trial = 0; trial < 200; ++trial) {
      UniPoly<FiniteField> f;
      int deg = 1 + static_cast<int>(rng() % 8);
      for (int i = 0; i < deg; ++i) f.coeffs.push_back(rng() % F.order());
      f.coeffs.push_back(1);
      auto got = poly_factor(F, f);
      UniPoly<FiniteField> prod = R.one();
      for (const auto& [g, m] : got.factors) {
        EXPECT_TRUE(is_irreducible(F, g));
        prod = R.mul(prod, R.pow(g, m));
      }
      EXPECT_EQ(prod, f);
      EXPECT_EQ(poly_factor(F, f).factors, got.factors);
    }
  }
}

TEST(SquarefreePart, Examples) {
  FiniteField F2 = FiniteField::prime(2), F3 = FiniteField::prime(3);
  PolyRing<FiniteField> R3(F3), R2(F2);
  EXPECT_EQ(squarefree_part(F3, R3.pow(R3.from_ints({-1, 1}), 3)), R3.from_ints({-1, 1}));
  EXPECT_EQ(squarefree_part(F2, R2.pow(R2.x(), 4)), R2.x());
  Rationals Q;
  PolyRing<Rationals> RQ(Q);
  auto f = RQ.from_ints({0, -2, 0, 0, 1});
  EXPECT_EQ(squarefree_part(Q, f), f);
}

TEST(SquarefreePart, Properties) {
  std::mt19937 rng(5);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    FiniteField F = FiniteField::prime(p);
    PolyRing<FiniteField> R(F);
    for (int trial = 0; trial < 100; ++trial) {
      UniPoly<FiniteField> f = R.one();
      int parts = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < parts; ++k) {
        UniPoly<FiniteField> g{{rng() % p, 1}};
        f = R.mul(f, R.pow(g, 1 + static_cast<unsigned>(rng() % 5)));
      }
      auto s = squarefree_part(F, f);
      EXPECT_TRUE(R.divides(s, f));
      EXPECT_EQ(R.gcd(s, R.derivative(s)), R.one());
      // same roots: f divides a power of s
      EXPECT_TRUE(R.divides(f, R.pow(s, static_cast<unsigned>(f.degree()))));
    }
  }
}

TEST(Embedding, HomomorphismF4IntoF16) {
  FiniteField F4(field_make(2, 2)), F16(field_make(2, 4));
  FieldEmbedding e(F4, F16);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      EXPECT_EQ(e(F4.mul(a, b)), F16.mul(e(a), e(b)));
      EXPECT_EQ(e(F4.add(a, b)), F16.add(e(a), e(b)));
    }
  FiniteField F3 = FiniteField::prime(3), F9(field_make(3, 2));
  FieldEmbedding g(F3, F9);
  EXPECT_EQ(g(2), 2u);
  EXPECT_THROW(FieldEmbedding(F9, FiniteField(field_make(3, 3))), EngineError);
}
