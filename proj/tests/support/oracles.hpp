#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "unimod/unimod.hpp"

namespace oracle {

using unimod::BigInt;
using unimod::IntMatrix;
using unimod::LatticeVector;
using unimod::Rational;

// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const BigInt t = m(0, j) * cofactor_det(minor);
    s += (j % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

inline std::int64_t isqrt_floor(const Rational& x) {
  if (x <= 0) return 0;
  std::int64_t k = 0;
  while (Rational((k + 1) * (k + 1)) <= x) ++k;
  return k;
}

inline std::vector<std::int64_t> box_radii(const unimod::Lattice& l, std::int64_t bound) {
  const unimod::RatMatrix inv = unimod::inverse_rational(l.gram());
  std::vector<std::int64_t> rad(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) rad[i] = isqrt_floor(Rational(bound) * inv(i, i));
  return rad;
}

// Number of points brute_force_box would visit, saturating at 2^62.
inline std::uint64_t box_points(const unimod::Lattice& l, std::int64_t bound) {
  std::uint64_t p = 1;
  for (auto r : box_radii(l, bound)) {
    const auto w = static_cast<std::uint64_t>(2 * r + 1);
    if (p > (std::uint64_t{1} << 62) / w) return std::uint64_t{1} << 62;
    p *= w;
  }
  return p;
}

inline constexpr std::uint64_t kBoxCap = 2000000;

// Every v with |v|^2 <= B, found by scanning the box |x_i| <= sqrt(B (G^-1)_ii).
inline std::vector<LatticeVector> brute_force_box(const unimod::Lattice& l, std::int64_t bound) {
  const std::size_t n = l.rank();
  const std::vector<std::int64_t> rad = box_radii(l, bound);
  std::vector<LatticeVector> out;
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -rad[i];
  for (;;) {
    if (l.norm(LatticeVector{x}) <= bound) out.push_back(LatticeVector{x});
    std::size_t i = 0;
    while (i < n && x[i] == rad[i]) {
      x[i] = -rad[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Vectors of w + 2L below the bound, by brute force over the box for 2L shifts.
inline std::vector<LatticeVector> brute_force_coset(const unimod::Lattice& l, const unimod::CharCoset& c,
                                                    std::int64_t bound) {
  std::vector<LatticeVector> out;
  for (const auto& v : brute_force_box(l, bound))
    if (c.contains(v)) out.push_back(v);
  return out;
}

inline std::vector<std::uint64_t> counts_by_norm(const unimod::Lattice& l, const std::vector<LatticeVector>& vs,
                                                 std::int64_t max_norm) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_norm) + 1, 0);
  for (const auto& v : vs) {
    const auto m = unimod::to_int64(l.norm(v));
    if (m <= max_norm) ++h[static_cast<std::size_t>(m)];
  }
  return h;
}

// G = A^T A + D for a random nonsingular A with small entries, D a small nonnegative diagonal.
inline IntMatrix random_pd_gram(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(-2, 2);
  std::uniform_int_distribution<int> dg(0, 1);
  for (;;) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
    if (cofactor_det(a) == 0) continue;
    IntMatrix g = a.transpose() * a;
    for (std::size_t i = 0; i < n; ++i) g(i, i) += dg(rng);
    return g;
  }
}

// Product of elementary column operations, a permutation and signs; entries stay in [-2, 2].
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (rng() & 1) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int k = 0; k < ops; ++k) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const int s = (rng() & 1) ? 1 : -1;
    IntMatrix v = u;
    bool ok = true;
    for (std::size_t r = 0; r < n; ++r) {
      v(r, j) += s * v(r, i);
      if (abs(v(r, j)) > 2) ok = false;
    }
    if (ok) u = std::move(v);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix p(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const int s = (rng() & 1) ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) p(r, c) = u(r, perm[c]) * s;
  }
  return p;
}

// Counts of (x_1..x_n) with all x_i odd by total norm, as a product of 1-D counts.
inline std::vector<std::uint64_t> odd_tuple_counts(int n, std::int64_t max_norm) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_norm) + 1, 0);
  h[0] = 1;
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(h.size(), 0);
    for (std::size_t m = 0; m < h.size(); ++m) {
      if (!h[m]) continue;
      for (std::int64_t x = 1; static_cast<std::int64_t>(m) + x * x <= max_norm; x += 2)
        next[m + static_cast<std::size_t>(x * x)] += 2 * h[m];
    }
    h = std::move(next);
  }
  return h;
}

// Norm counts of E8 in the even coordinate model: Z^8 and (Z+1/2)^8 with even coordinate sum.
// Works in doubled coordinates y = 2x, so |x|^2 = |y|^2 / 4.
inline std::vector<std::uint64_t> e8_model_counts(std::int64_t max_norm) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_norm) + 1, 0);
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= 4 * max_norm) ++r;
  for (int odd = 0; odd <= 1; ++odd) {
    std::vector<std::int64_t> vals;
    for (std::int64_t y = -r; y <= r; ++y)
      if (((y % 2) != 0) == (odd == 1)) vals.push_back(y);
    std::vector<std::size_t> k(8, 0);
    for (;;) {
      std::int64_t sum = 0, sq = 0;
      for (auto i : k) {
        sum += vals[i];
        sq += vals[i] * vals[i];
      }
      if (sum % 4 == 0 && sq <= 4 * max_norm) ++h[static_cast<std::size_t>(sq / 4)];
      std::size_t i = 0;
      while (i < 8 && k[i] + 1 == vals.size()) k[i++] = 0;
      if (i == 8) break;
      ++k[i];
    }
  }
  return h;
}

inline std::set<std::vector<std::int64_t>> as_set(const std::vector<LatticeVector>& vs) {
  std::set<std::vector<std::int64_t>> s;
  for (const auto& v : vs) s.insert(v.coords);
  return s;
}

}  // namespace oracle
