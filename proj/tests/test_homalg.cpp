#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "splitgen/homalg.hpp"
#include "splitgen/models.hpp"
#include "splitgen/twisted.hpp"

using namespace splitgen;

namespace {

FiniteField Fp(std::uint64_t p) { return FiniteField::prime(p); }

// k[x]/(x^m)
PresentedAlgebra<FiniteField> truncated(std::uint64_t p, unsigned m) {
  return corpus::monogenic(Fp(p), std::vector<std::uint64_t>(m, 0));
}

// Products of up to three small fields over F_p.
std::vector<Algebra<FiniteField>> semisimple_battery(std::uint64_t p) {
  std::vector<Algebra<FiniteField>> out;
  auto F = Fp(p);
  auto ground = Algebra<FiniteField>::from_table(F, 1, {1}, {0}, 0);
  out.push_back(ground);
  out.push_back(qh_product(ground, ground));
  // x^2 - x and x^3 - x split into points over any F_p with p > 2
  out.push_back(corpus::monogenic(F, {0, p - 1}).algebra());
  if (p > 2) out.push_back(corpus::monogenic(F, {0, p - 1, 0}).algebra());
  // an irreducible quadratic: a field of degree 2
  auto m = field_make(p, 2).modulus;
  out.push_back(corpus::monogenic(F, {m[0], m[1]}).algebra());
  return out;
}

}  // namespace

TEST(Ext, KoszulRanks) {
  for (std::size_t m = 0; m <= 6; ++m) {
    std::vector<std::int64_t> degs(m, -2);
    auto e = ext_over_polynomial(degs, Fp(3));
    ASSERT_EQ(e.dims.size(), m + 1);
    std::size_t total = 0;
    for (std::size_t j = 0; j <= m; ++j) {
      EXPECT_EQ(e.dims[j], static_cast<std::size_t>(oracle::binomial(static_cast<unsigned>(m), static_cast<unsigned>(j))));
      total += e.dims[j];
    }
    EXPECT_EQ(total, std::size_t{1} << m);
  }
  EXPECT_EQ(ext_over_polynomial({-2}, Rationals()).dims, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(ext_over_polynomial({-2, -4}, Fp(2)).dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_THROW(ext_over_polynomial({-1}, Fp(2)), EngineError);
  EXPECT_THROW(ext_over_polynomial({2}, Fp(2)), EngineError);
}

TEST(Ext, UnitaryGroupDegrees) {
  for (unsigned n = 2; n <= 5; ++n) {
    auto shifts = loop_group_shifts("SU(" + std::to_string(n) + ")");
    std::vector<std::int64_t> degs;
    for (auto s : shifts) degs.push_back(-s);
    auto e = ext_over_polynomial(degs, Fp(5));
    std::vector<std::int64_t> expect;
    for (unsigned k = 2; k <= n; ++k) expect.push_back(2 * k - 1);
    EXPECT_EQ(e.ext_generator_degrees, expect);
  }
}

TEST(Hochschild, TruncatedPolynomialsMatchOracle) {
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned m = 1; m <= 4; ++m) {
      auto A = truncated(p, m).algebra();
      auto h = hochschild_cohomology(A, 5);
      ASSERT_FALSE(h.truncated);
      for (int r = 0; r <= 5; ++r)
        EXPECT_EQ(static_cast<std::int64_t>(h.dims[static_cast<std::size_t>(r)]),
                  oracle::hh_truncated_polynomial(m, static_cast<std::int64_t>(p), r))
            << "p=" << p << " m=" << m << " r=" << r;
    }
}

TEST(Hochschild, Examples) {
  auto f5 = hochschild_cohomology(qh_cpn(1, Fp(5)).algebra(), 4);
  EXPECT_EQ(f5.dims, (std::vector<std::size_t>{2, 0, 0, 0, 0}));
  auto f2 = hochschild_cohomology(qh_cpn(1, Fp(2)).algebra(), 6);
  ASSERT_EQ(f2.dims.size(), 7u);
  for (auto d : f2.dims) EXPECT_NE(d, 0u);
  EXPECT_FALSE(f2.parity_split);
  auto g = hochschild_cohomology(Algebra<FiniteField>::from_table(Fp(7), 1, {1}, {0}, 0), 5);
  EXPECT_EQ(g.dims, (std::vector<std::size_t>{1, 0, 0, 0, 0, 0}));
  auto q = hochschild_cohomology(qh_quadric3(Fp(2)).algebra(), 6);
  EXPECT_FALSE(q.truncated);
  EXPECT_EQ(q.dims.size(), 7u);
}

TEST(Hochschild, SizeBound) {
  auto A = qh_quadric3(Fp(3)).algebra();
  auto h = hochschild_cohomology(A, 7);
  EXPECT_TRUE(h.truncated);
  EXPECT_EQ(h.dims.size(), 7u);  // 4^{r+2} <= 65536 for r <= 6
  auto full = hochschild_cohomology(A, 7, 1u << 20);
  EXPECT_FALSE(full.truncated);
  EXPECT_EQ(full.dims.size(), 8u);
  EXPECT_THROW(hochschild_cohomology(A, 2, 8), EngineError);
}

TEST(Hochschild, CenterAndSemisimpleBattery) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (const auto& P : corpus::all_monogenic(Fp(p), 3)) {
      auto h = hochschild_cohomology(P.algebra(), 3);
      EXPECT_EQ(h.dims[0], P.algebra().dim());
    }
    for (const auto& A : semisimple_battery(p)) {
      ASSERT_EQ(radical(A).size(), 0u);
      auto h = hochschild_cohomology(A, 4);
      EXPECT_EQ(h.dims[0], A.dim());
      for (std::size_t r = 1; r < h.dims.size(); ++r) EXPECT_EQ(h.dims[r], 0u) << "p=" << p << " r=" << r;
    }
  }
}

TEST(Hochschild, DifferentialSquaresToZero) {
  std::mt19937_64 rng(11);
  std::vector<Algebra<FiniteField>> algebras{qh_quadric3(Fp(3)).algebra(), qh_cpn(2, Fp(2)).algebra()};
  for (const auto& A : corpus::two_variable(Fp(5))) algebras.push_back(A);
  for (const auto& A : algebras) {
    HochschildComplex<FiniteField> H(A);
    const auto p = A.field().characteristic();
    for (unsigned r = 0; r <= 4; ++r) {
      std::vector<std::uint64_t> f(H.cochain_dim(r));
      for (auto& x : f) x = rng() % p;
      auto dd = H.apply(r + 1, H.apply(r, f));
      for (auto x : dd) ASSERT_EQ(x, 0u) << "r=" << r;
    }
  }
}

TEST(Parity, Verdicts) {
  EXPECT_EQ(parity_semisimplicity_check(qh_cpn(1, Fp(5)).algebra(), 4).verdict, ParityVerdict::ConsistentSemisimple);
  EXPECT_EQ(parity_semisimplicity_check(qh_cpn(1, Fp(2)).algebra(), 6).verdict,
            ParityVerdict::ConsistentNonSemisimple);
  EXPECT_EQ(parity_semisimplicity_check(Algebra<FiniteField>::from_table(Fp(3), 1, {1}, {0}, 0), 4).verdict,
            ParityVerdict::ConsistentSemisimple);
  EXPECT_EQ(parity_semisimplicity_check(qh_quadric3(Rationals()).algebra(), 3).verdict,
            ParityVerdict::ConsistentSemisimple);
}

TEST(Parity, BatteryHasNoViolation) {
  std::vector<Algebra<FiniteField>> battery;
  for (std::uint64_t p : {2u, 3u}) {
    for (const auto& P : corpus::all_monogenic(Fp(p), 2)) battery.push_back(P.algebra());
    for (const auto& A : corpus::two_variable(Fp(p))) battery.push_back(A);
  }
  battery.push_back(qh_quadric3(Fp(2)).algebra());
  battery.push_back(qh_quadric3(Fp(3)).algebra());
  ASSERT_GE(battery.size(), 20u);
  for (const auto& A : battery) EXPECT_NE(parity_semisimplicity_check(A, 5).verdict, ParityVerdict::Violation);
}

TEST(Nonformality, Reports) {
  auto r = nonformality_report(qh_cpn(1, Fp(2)).algebra(), 6);
  EXPECT_TRUE(r.nonformal);
  EXPECT_FALSE(r.semisimple);
  bool computed = false, external = false;
  for (const auto& s : r.steps) (s.computed ? computed : external) = true;
  EXPECT_TRUE(computed);
  EXPECT_TRUE(external);
  auto q = nonformality_report(qh_quadric3(Fp(5)).algebra(), 4);
  EXPECT_TRUE(q.semisimple);
  EXPECT_EQ(q.conclusion, "semisimple - no obstruction");
  for (const auto& s : q.steps) EXPECT_TRUE(s.computed);
  EXPECT_TRUE(nonformality_report(Algebra<FiniteField>::from_table(Fp(2), 1, {1}, {0}, 0), 3).semisimple);
}
