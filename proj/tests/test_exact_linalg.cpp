#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace unimod;

namespace {

IntMatrix e8_gram() { return dynkin_gram({'E', 8}); }

Rational quad_from_cholesky(const CholeskyData& c, const std::vector<std::int64_t>& x) {
  const std::size_t n = x.size();
  Rational q = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = x[i];
    for (std::size_t j = i + 1; j < n; ++j) t += c.mu(j, i) * x[j];
    q += c.d[i] * t * t;
  }
  return q;
}

bool parity_solves(const IntMatrix& a, const ParityVector& x, const ParityVector& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x.bits[j];
    if ((is_odd(s) ? 1 : 0) != b.bits[i]) return false;
  }
  return true;
}

}  // namespace

TEST(Determinant, SmallCases) {
  EXPECT_EQ(det_exact(IntMatrix::identity(3)), 1);
  EXPECT_EQ(det_exact(IntMatrix{{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(det_exact(e8_gram()), 1);
  EXPECT_EQ(oracle::cofactor_det(e8_gram()), 1);
}

TEST(Determinant, NonSquareThrows) {
  try {
    det_exact(IntMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Dimension);
  }
}

TEST(Determinant, AgreesWithCofactorOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-3, 3);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    ASSERT_EQ(det_exact(m), oracle::cofactor_det(m)) << "case " << t;
  }
}

TEST(SolveMod2, Examples) {
  ParityVector ones{{1, 1, 1, 1}};
  EXPECT_EQ(solve_mod2(IntMatrix::identity(4), ones), ones);
  ParityVector zero{{0, 0}};
  EXPECT_EQ(solve_mod2(IntMatrix{{2, 1}, {1, 2}}, zero), zero);
}

TEST(SolveMod2, D12PlusUniqueSolution) {
  const Lattice l = catalog("D12+");
  const IntMatrix& g = l.gram();
  const ParityVector b = diagonal_parity(g);
  const ParityVector x = solve_mod2(g, b);
  ASSERT_TRUE(parity_solves(g, x, b));
  int solutions = 0;
  for (unsigned mask = 0; mask < (1u << 12); ++mask) {
    ParityVector y;
    for (int i = 0; i < 12; ++i) y.bits.push_back((mask >> i) & 1);
    if (parity_solves(g, y, b)) {
      ++solutions;
      EXPECT_EQ(y, x);
    }
  }
  EXPECT_EQ(solutions, 1);
}

TEST(SolveMod2, SingularThrows) {
  try {
    solve_mod2(IntMatrix{{2, 0}, {0, 1}}, ParityVector{{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

TEST(SolveMod2, ResubstitutionOnRandomOddDeterminants) {
  std::mt19937_64 rng(5);
  int solved = 0;
  for (int t = 0; t < 200; ++t) {
    const IntMatrix g = oracle::random_pd_gram(rng, 4);
    if (!is_odd(det_exact(g))) continue;
    ParityVector b;
    for (int i = 0; i < 4; ++i) b.bits.push_back(rng() & 1);
    EXPECT_TRUE(parity_solves(g, solve_mod2(g, b), b));
    ++solved;
  }
  EXPECT_GT(solved, 10);
}

TEST(Cholesky, Examples) {
  const CholeskyData i2 = cholesky_rational(IntMatrix::identity(2));
  EXPECT_EQ(i2.d[0], 1);
  EXPECT_EQ(i2.d[1], 1);
  EXPECT_EQ(i2.mu(1, 0), 0);
  const CholeskyData a2 = cholesky_rational(IntMatrix{{2, 1}, {1, 2}});
  EXPECT_EQ(a2.d[0], 2);
  EXPECT_EQ(a2.d[1], Rational(3, 2));
  EXPECT_EQ(a2.mu(1, 0), Rational(1, 2));
}

TEST(Cholesky, ReconstructsE8Form) {
  const IntMatrix g = e8_gram();
  const CholeskyData c = cholesky_rational(g);
  for (const auto& d : c.d) EXPECT_GT(d, 0);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-5, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int64_t> x(8);
    for (auto& v : x) v = e(rng);
    EXPECT_EQ(quad_from_cholesky(c, x), Rational(bilinear(g, x, x)));
  }
}

TEST(Cholesky, NotPositiveDefinite) {
  try {
    cholesky_rational(IntMatrix{{1, 2}, {2, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
  }
}

TEST(IntegralBasis, Identity) {
  RatMatrix gens(2, 2);
  gens(0, 0) = 1;
  gens(1, 1) = 1;
  const ScaledBasis b = integral_basis_from_rational_spans(gens);
  EXPECT_EQ(b.denominator, 1);
  EXPECT_EQ(abs(det_exact(b.rows)), 1);
}

TEST(IntegralBasis, HalfIntegerSupergroup) {
  RatMatrix gens(3, 2);
  gens(0, 0) = 1;
  gens(1, 1) = 1;
  gens(2, 0) = Rational(1, 2);
  gens(2, 1) = Rational(1, 2);
  const ScaledBasis b = integral_basis_from_rational_spans(gens);
  // covolume relative to Z^2
  const Rational vol = Rational(abs(det_exact(b.rows))) / Rational(b.denominator * b.denominator);
  EXPECT_EQ(vol, Rational(1, 2));
  // every generator lies in the span, and every basis row is an integer combination of generators
  RatMatrix basis(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) basis(i, j) = Rational(b.rows(i, j)) / Rational(b.denominator);
  for (std::size_t g = 0; g < 3; ++g) {
    const auto c = solve_in_row_span(basis, gens.row(g));
    ASSERT_TRUE(c.has_value());
    for (const auto& v : *c) EXPECT_TRUE(is_integer(v));
  }
}

TEST(IntegralBasis, D12WithSpinorGlueIsUnimodular) {
  const Lattice l = build_glue(dplus_recipe(12));
  EXPECT_EQ(l.rank(), 12u);
  EXPECT_EQ(det_exact(l.gram()), 1);
}

TEST(IntegralBasis, RankDeficient) {
  RatMatrix gens(2, 2);
  gens(0, 0) = 1;
  gens(1, 0) = 2;
  try {
    integral_basis_from_rational_spans(gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

TEST(Lll, TransformIsUnimodularAndConsistent) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix g = oracle::random_pd_gram(rng, 5);
    const LllResult r = lll_reduce_gram(g);
    EXPECT_EQ(abs(det_exact(r.transform)), 1);
    EXPECT_EQ(r.transform.transpose() * g * r.transform, r.gram);
    EXPECT_EQ(unimodular_inverse(r.transform) * r.transform, IntMatrix::identity(5));
  }
}
