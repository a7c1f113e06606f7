#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace unimod;

namespace {

std::vector<std::pair<std::string, std::string>> sum_pairs() {
  return {{"Z1", "Z1"}, {"Z1", "Z2"}, {"Z2", "Z3"}, {"Z1", "E8"}, {"D4+", "Z1"}, {"E8", "Z2"}};
}

}  // namespace

TEST(QSeries, TruncationIsEnforced) {
  QSeries s(7);
  s.set(4, 3);
  EXPECT_EQ(s.coefficient(4), 3);
  EXPECT_EQ(s.coefficient(5), 0);
  EXPECT_THROW(s.coefficient(8), Error);
  EXPECT_THROW(s.set(9, 1), Error);
}

TEST(QSeries, ProductTakesMinTruncation) {
  QSeries a(10);
  a.set(0, 1);
  a.set(3, 2);
  QSeries b(6);
  b.set(0, 1);
  b.set(4, -1);
  const QSeries p = a * b;
  EXPECT_EQ(p.truncation(), 6);
  EXPECT_EQ(p.coefficient(3), 2);
  EXPECT_EQ(p.coefficient(4), -1);
  EXPECT_EQ(p.coefficient(6), 0);
  EXPECT_EQ(mul(a, QSeries::one(10)), a);
  EXPECT_EQ(add(a, scale(a, -1)).terms().size(), 0u);
}

TEST(QSeries, Printing) {
  QSeries s(7);
  s.set(0, 1);
  s.set(4, 2);
  EXPECT_EQ(s.to_string(), "1 * q^{0/4} + 2 * q^{4/4} + O(q^{8/4})");
  EXPECT_EQ(s.dump(), "0 1\n4 2\n");
}

TEST(ThetaOf, Examples) {
  const QSeries z = theta_of(catalog("Z1"), 9);
  EXPECT_EQ(z.truncation(), 39);
  QSeries want(39);
  want.set(0, 1);
  want.set(4, 2);
  want.set(16, 2);
  want.set(36, 2);
  EXPECT_EQ(z, want);

  const QSeries e8 = theta_of(catalog("E8"), 4);
  EXPECT_EQ(e8.coefficient(0), 1);
  EXPECT_EQ(e8.coefficient(8), 240);
  EXPECT_EQ(e8.coefficient(16), 2160);
  EXPECT_EQ(e8.terms().size(), 3u);

  const QSeries z0 = theta_of(catalog("Z0"), 5);
  EXPECT_EQ(z0.terms().size(), 1u);
  EXPECT_EQ(z0.coefficient(0), 1);
}

TEST(ShadowTheta, Examples) {
  const QSeries z = shadow_theta(catalog("Z1"), 30);
  for (std::int64_t e = 0; e <= 30; ++e) EXPECT_EQ(z.coefficient(e), (e == 1 || e == 9 || e == 25) ? 2 : 0) << e;

  const Lattice e8 = catalog("E8");
  // w = 0, so x = 2v and |x|^2 / 4 = |v|^2: the same series on the quarter grid
  const QSeries s = shadow_theta(e8, 24);
  const QSeries t = theta_of(e8, 6);
  for (std::int64_t m = 0; m <= 24; ++m) EXPECT_EQ(s.coefficient(m), t.coefficient(m));

  const QSeries z2 = shadow_theta(catalog("Z2"), 20);
  const auto odd = oracle::odd_tuple_counts(2, 20);
  EXPECT_EQ(z2.coefficient(2), 4);
  EXPECT_EQ(z2.coefficient(10), 8);
  for (std::int64_t m = 0; m <= 20; ++m) EXPECT_EQ(z2.coefficient(m), odd[static_cast<std::size_t>(m)]);
}

TEST(ShadowTheta, NonUnimodularRejected) { EXPECT_THROW(shadow_theta(catalog("A2"), 4), Error); }

TEST(ThetaPower, MatchesEnumeration) {
  for (int n = 0; n <= 10; ++n) {
    const QSeries p = theta_power(n, 6);
    const QSeries e = theta_of(catalog("Z" + std::to_string(n)), 6);
    EXPECT_EQ(p, e) << n;
  }
  EXPECT_EQ(theta_power(1, 9), theta_of(catalog("Z1"), 9));
  const QSeries z8 = theta_power(8, 4);
  EXPECT_EQ(z8.coefficient(4), 16);
  EXPECT_EQ(z8.coefficient(8), 112);
  EXPECT_EQ(z8.coefficient(12), 448);
  EXPECT_EQ(z8.coefficient(16), 1136);
}

TEST(ThetaOf, SquareOfThetaZ) {
  const QSeries z = theta_of(catalog("Z1"), 5);
  const QSeries z2 = theta_of(catalog("Z2"), 5);
  EXPECT_EQ(z * z, z2);
  const Lattice l = catalog("Z2");
  const auto box = oracle::counts_by_norm(l, oracle::brute_force_box(l, 5), 5);
  for (std::int64_t m = 0; m <= 5; ++m) EXPECT_EQ(z2.coefficient(4 * m), box[static_cast<std::size_t>(m)]);
}

TEST(Multiplicativity, ThetaAndShadow) {
  for (const auto& [a, b] : sum_pairs()) {
    const Lattice la = catalog(a);
    const Lattice lb = catalog(b);
    const Lattice s = direct_sum(la, lb);
    EXPECT_EQ(theta_of(s, 12), theta_of(la, 12) * theta_of(lb, 12)) << a << "+" << b;
    EXPECT_EQ(shadow_theta(s, 48), shadow_theta(la, 48) * shadow_theta(lb, 48)) << a << "+" << b;
  }
  const QSeries z = shadow_theta(catalog("Z1"), 40);
  EXPECT_EQ(z * z, shadow_theta(catalog("Z2"), 40));
}

TEST(Mod8Spectrum, Examples) {
  EXPECT_TRUE(mod8_spectrum(shadow_theta(catalog("Z1"), 60), 1));
  EXPECT_TRUE(mod8_spectrum(shadow_theta(catalog("E8"), 40), 8));
  QSeries planted = shadow_theta(catalog("Z3"), 40);
  EXPECT_TRUE(mod8_spectrum(planted, 3));
  planted.set(3 + 4, 1);
  EXPECT_FALSE(mod8_spectrum(planted, 3));
}

TEST(Mod8Spectrum, CatalogShadows) {
  for (const auto& id : {"Z1", "Z2", "Z5", "Z7", "E8", "D4+", "D8+", "D12+", "A15+", "E7^2+", "D8^2+"}) {
    const Lattice l = catalog(id);
    const auto mc = min_characteristic(l);
    EXPECT_TRUE(mod8_spectrum(shadow_theta(l, mc.min_norm + 16), static_cast<int>(l.rank()))) << id;
  }
}

TEST(Jacobi, Passes) {
  EXPECT_TRUE(jacobi_check(1).pass);
  EXPECT_TRUE(jacobi_check(40).pass);
  EXPECT_TRUE(jacobi_check(400).pass);
}

TEST(Jacobi, MutationIsCaught) {
  const JacobiReport r = jacobi_check(40, JacobiMutation::DropSecondFactor);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.first_discrepancy.has_value());
  EXPECT_EQ(*r.first_discrepancy, 17);
  EXPECT_NE(r.lhs_coefficient, r.rhs_coefficient);
}

TEST(UnitVectors, FirstCoefficientCountsPairs) {
  for (const auto& id : {"Z1", "Z5", "E8", "D4+"}) {
    for (int k = 0; k <= 2; ++k) {
      Lattice l = catalog(id);
      if (k > 0) l = direct_sum(l, catalog("Z" + std::to_string(k)));
      EXPECT_EQ(theta_of(l, 1).coefficient(4), BigInt(2 * unit_vector_pairs(l).size())) << id << "+Z" << k;
    }
  }
}

TEST(ThetaByBlocks, AgreesWithDirectEnumeration) {
  std::mt19937_64 rng(99);
  for (const auto& id : {"Z6", "E8", "D8+"}) {
    Lattice l = direct_sum(catalog(id), catalog("Z2"));
    l = rebase(l, oracle::random_unimodular(rng, l.rank()));
    EXPECT_EQ(theta_by_blocks(l, 6), theta_of(l, 6)) << id;
  }
  const UnitSplit split = split_unit_vectors(direct_sum(catalog("Z3"), catalog("E8")));
  EXPECT_EQ(split.units, 3u);
  ASSERT_TRUE(split.rest.has_value());
  EXPECT_EQ(split.rest->rank(), 8u);
  EXPECT_EQ(split.rest->determinant(), 1);
}
