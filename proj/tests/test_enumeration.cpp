#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace unimod;

TEST(EnumerateShort, Z2Bound2) {
  const auto vs = enumerate_short(catalog("Z2"), 2);
  EXPECT_EQ(vs.size(), 9u);
  EXPECT_EQ(oracle::as_set(vs), oracle::as_set(oracle::brute_force_box(catalog("Z2"), 2)));
  EXPECT_TRUE(vs.front().is_zero());
}

TEST(EnumerateShort, E8Roots) {
  const Lattice e8 = catalog("E8");
  const auto vs = enumerate_short(e8, 2);
  EXPECT_EQ(vs.size(), 241u);
  EXPECT_EQ(oracle::as_set(vs).size(), vs.size());
  EXPECT_EQ(oracle::counts_by_norm(e8, vs, 2), oracle::e8_model_counts(2));
}

TEST(EnumerateShort, BoundZero) {
  for (const auto& id : {"Z1", "E8", "D12+", "A2"}) {
    const auto vs = enumerate_short(catalog(id), 0);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_TRUE(vs[0].is_zero());
  }
}

TEST(EnumerateShort, CanonicalOrderAndSymmetry) {
  const Lattice l = catalog("D4+");
  const auto vs = enumerate_short(l, 4);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const BigInt a = l.norm(vs[i - 1]);
    const BigInt b = l.norm(vs[i]);
    ASSERT_TRUE(a < b || (a == b && vs[i - 1] < vs[i]));
  }
  const auto s = oracle::as_set(vs);
  for (const auto& v : vs) EXPECT_TRUE(s.count((-v).coords));
}

TEST(EnumerateShort, MatchesBoxOracleOnRandomGrams) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> bd(0, 10);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t b = bd(rng);
    Lattice l = make_lattice(oracle::random_pd_gram(rng, static_cast<std::size_t>(dim(rng))));
    while (oracle::box_points(l, b) > oracle::kBoxCap)
      l = make_lattice(oracle::random_pd_gram(rng, l.rank()));
    ASSERT_EQ(oracle::as_set(enumerate_short(l, b)), oracle::as_set(oracle::brute_force_box(l, b))) << "case " << t;
  }
}

TEST(EnumerateShort, WidthsAgree) {
  const Lattice l = catalog("D12+");
  EnumOptions o;
  o.width = KernelWidth::Int64;
  const auto a = enumerate_short(l, 4, o);
  o.width = KernelWidth::Int128;
  const auto b = enumerate_short(l, 4, o);
  o.width = KernelWidth::Big;
  const auto c = enumerate_short(l, 4, o);
  o.reduce = false;
  const auto d = enumerate_short(l, 4, o);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a, d);
}

TEST(EnumerateShort, ThreadCountDoesNotChangeOutput) {
  const Lattice l = catalog("E8");
  EnumOptions o;
  const auto one = enumerate_short(l, 4, o);
  o.threads = 3;
  EXPECT_EQ(enumerate_short(l, 4, o), one);
  EXPECT_EQ(norm_histogram(l, 6, o).counts, norm_histogram(l, 6).counts);
}

TEST(EnumerateCoset, Z1) {
  const Lattice z1 = catalog("Z1");
  const auto vs = enumerate_coset(z1, characteristic_coset(z1), 9);
  std::set<std::vector<std::int64_t>> want = {{-3}, {-1}, {1}, {3}};
  EXPECT_EQ(oracle::as_set(vs), want);
}

TEST(EnumerateCoset, Z2) {
  const Lattice z2 = catalog("Z2");
  const auto vs = enumerate_coset(z2, characteristic_coset(z2), 2);
  EXPECT_EQ(vs.size(), 4u);
  for (const auto& v : vs) EXPECT_EQ(z2.norm(v), 2);
}

TEST(EnumerateCoset, E8OnlyZero) {
  const Lattice e8 = catalog("E8");
  const auto vs = enumerate_coset(e8, characteristic_coset(e8), 0);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_TRUE(vs[0].is_zero());
}

TEST(EnumerateCoset, MatchesBoxOracle) {
  std::mt19937_64 rng(7);
  for (const auto& id : {"Z3", "Z5", "D4+"}) {
    const Lattice base = catalog(id);
    for (int t = 0; t < 5; ++t) {
      Lattice l = rebase(base, oracle::random_unimodular(rng, base.rank()));
      while (oracle::box_points(l, 13) > oracle::kBoxCap) l = rebase(base, oracle::random_unimodular(rng, base.rank()));
      const CharCoset c = characteristic_coset(l);
      EXPECT_EQ(oracle::as_set(enumerate_coset(l, c, 13)), oracle::as_set(oracle::brute_force_coset(l, c, 13))) << id;
    }
  }
}

TEST(EnumerateCoset, CongruenceAndModEight) {
  for (const auto& id : {"Z5", "E8", "D12+", "A15+", "E7^2+"}) {
    const Lattice l = catalog(id);
    const CharCoset c = characteristic_coset(l);
    const auto mc = min_characteristic(l);
    const std::size_t n = l.rank();
    for (const auto& x : enumerate_coset(l, c, mc.min_norm + 8)) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        ASSERT_FALSE(is_odd(bilinear(l.gram(), e, x.coords) - l.gram()(i, i))) << id;
      }
      EXPECT_EQ(to_int64(l.norm(x)) % 8, static_cast<std::int64_t>(n % 8)) << id;
    }
  }
}

TEST(NormHistogram, Examples) {
  EXPECT_EQ(norm_histogram(catalog("Z1"), 9).counts, (std::vector<std::uint64_t>{1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
  EXPECT_EQ(norm_histogram(catalog("Z2"), 5).counts, (std::vector<std::uint64_t>{1, 4, 4, 0, 4, 8}));
  const Lattice z2 = catalog("Z2");
  EXPECT_EQ(norm_histogram(z2, 5).counts, oracle::counts_by_norm(z2, oracle::brute_force_box(z2, 5), 5));
  const NormHistogram e8 = norm_histogram(catalog("E8"), 4);
  EXPECT_EQ(e8[1], 0u);
  EXPECT_EQ(e8[2], 240u);
  EXPECT_EQ(e8[3], 0u);
  EXPECT_EQ(e8[4], 2160u);
}

TEST(NormHistogram, E8AgainstCoordinateModel) {
  EXPECT_EQ(norm_histogram(catalog("E8"), 4).counts, oracle::e8_model_counts(4));
}

TEST(NormHistogram, EvenCounts) {
  for (const auto& id : {"Z3", "E8", "D12+", "A2", "D5"}) {
    const NormHistogram h = norm_histogram(catalog(id), 6);
    EXPECT_EQ(h[0], 1u);
    for (std::size_t m = 1; m < h.counts.size(); ++m) EXPECT_EQ(h[m] % 2, 0u) << id;
  }
}

TEST(MinCharacteristic, Zn) {
  for (int n = 1; n <= 10; ++n) {
    const auto r = min_characteristic(catalog("Z" + std::to_string(n)));
    EXPECT_EQ(r.min_norm, n);
    EXPECT_EQ(r.count_at_min, BigInt(1) << n);
  }
}

TEST(MinCharacteristic, E8) {
  const Lattice e8 = catalog("E8");
  const auto r = min_characteristic(e8);
  EXPECT_EQ(r.min_norm, 0);
  EXPECT_EQ(r.count_at_min, 1);
  EXPECT_EQ(r.count_at_min, table_expectation(8).count_at_min);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.witnesses[0].is_zero());
}

TEST(MinCharacteristic, O23) {
  const Lattice o23 = catalog("O23");
  const auto r = min_characteristic(o23);
  EXPECT_EQ(r.min_norm, 15);
  EXPECT_EQ(r.count_at_min, 94208);
  EXPECT_EQ(r.count_at_min, table_expectation(23).count_at_min);
  EXPECT_EQ(r.witnesses.size(), 10u);
  const CharCoset c = characteristic_coset(o23);
  for (const auto& w : r.witnesses) {
    EXPECT_TRUE(c.contains(w));
    EXPECT_EQ(o23.norm(w), 15);
  }
}

TEST(MinCharacteristic, Multiplicative) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"Z2", "E8"}, {"D4+", "Z3"}, {"D12+", "Z1"}, {"D8+", "D4+"}, {"E8", "E8"}};
  for (const auto& [a, b] : pairs) {
    const auto ra = min_characteristic(catalog(a));
    const auto rb = min_characteristic(catalog(b));
    const auto rs = min_characteristic(direct_sum(catalog(a), catalog(b)));
    EXPECT_EQ(rs.min_norm, ra.min_norm + rb.min_norm) << a << "+" << b;
    EXPECT_EQ(rs.count_at_min, ra.count_at_min * rb.count_at_min) << a << "+" << b;
  }
}

TEST(MinCharacteristic, WitnessesAgreeWithCosetEnumeration) {
  const Lattice l = catalog("D12+");
  const auto r = min_characteristic(l);
  const auto all = enumerate_coset(l, characteristic_coset(l), r.min_norm);
  EXPECT_EQ(BigInt(all.size()), r.count_at_min);
  ASSERT_GE(all.size(), r.witnesses.size());
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) EXPECT_EQ(r.witnesses[i], all[i]);
}

TEST(IdentifyRoots, Examples) {
  const auto z2 = identify_roots(catalog("Z2"));
  EXPECT_EQ(z2.label(), "A1^2");
  EXPECT_EQ(z2.total_roots, 4u);

  const auto e8 = identify_roots(catalog("E8"));
  EXPECT_EQ(e8.label(), "E8");
  EXPECT_EQ(e8.total_roots, 240u);
  EXPECT_EQ(e8.rank_of_span, 8u);

  const auto o23 = identify_roots(catalog("O23"));
  EXPECT_TRUE(o23.components.empty());
  EXPECT_EQ(o23.total_roots, 0u);
}

TEST(IdentifyRoots, RootLatticesAndConventions) {
  EXPECT_EQ(identify_roots(catalog("D3")).label(), "A3");
  EXPECT_EQ(identify_roots(catalog("D5")).label(), "D5");
  EXPECT_EQ(identify_roots(catalog("E6")).label(), "E6");
  EXPECT_EQ(identify_roots(catalog("E7")).label(), "E7");
  EXPECT_EQ(identify_roots(catalog("A4")).label(), "A4");
  EXPECT_EQ(identify_roots(direct_sum(catalog("A2"), catalog("E6"))).label(), "E6A2");
}

TEST(IdentifyRoots, TotalMatchesHistogram) {
  for (const auto& id : {"Z4", "E8", "D12+", "A15+", "D8^2+", "A11E6", "D4+"}) {
    const Lattice l = catalog(id);
    const auto r = identify_roots(l);
    EXPECT_EQ(r.total_roots, norm_histogram(l, 2)[2]) << id;
    std::uint64_t sum = 0;
    for (const auto& c : r.components) sum += c.multiplicity * ade_root_count(c.kind, c.rank);
    EXPECT_EQ(sum, r.total_roots) << id;
  }
}
