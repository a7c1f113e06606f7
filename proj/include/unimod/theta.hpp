#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unimod/enumeration.hpp"
#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"
#include "unimod/qseries.hpp"
#include "unimod/recognition.hpp"

namespace unimod {

/// theta_L through norm N: coefficient r_m at quarter-exponent 4m, truncation 4N+3.
inline QSeries theta_of(const Lattice& l, std::int64_t max_norm, const EnumOptions& opts = {}) {
  if (max_norm < 0) throw Error(ErrorKind::Precondition, "max_norm must be >= 0");
  QSeries s(4 * max_norm + 3);
  if (l.rank() == 0) {
    s.set(0, 1);
    return s;
  }
  const NormHistogram h = norm_histogram(l, max_norm, opts);
  for (std::int64_t m = 0; m <= max_norm; ++m)
    if (h.counts[m]) s.set(4 * m, BigInt(h.counts[m]));
  return s;
}

/// Norm generating function of the characteristic coset w + 2L: the
/// coefficient at quarter-exponent m counts x in w + 2L with |x|^2 = m
/// (these are the shadow vectors x/2 of norm m/4).
inline QSeries shadow_theta(const Lattice& l, std::int64_t max_quarter, const EnumOptions& opts = {}) {
  if (max_quarter < 0) throw Error(ErrorKind::Precondition, "max_quarter must be >= 0");
  const CharCoset c = characteristic_coset(l);
  QSeries s(max_quarter);
  if (l.rank() == 0) {
    s.set(0, 1);
    return s;
  }
  const NormHistogram h = coset_histogram(l, c, max_quarter, opts);
  for (std::int64_t m = 0; m <= max_quarter; ++m)
    if (h.counts[m]) s.set(m, BigInt(h.counts[m]));
  return s;
}

/// theta_Z^n through norm N.
inline QSeries theta_power(int n, std::int64_t max_norm) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative power");
  QSeries z(4 * max_norm + 3);
  z.set(0, 1);
  for (std::int64_t k = 1; k * k <= max_norm; ++k) z.set(4 * k * k, 2);
  QSeries r = QSeries::one(4 * max_norm + 3);
  for (int i = 0; i < n; ++i) r = r * z;
  return r;
}

/// True iff every nonzero coefficient sits at a quarter-exponent = n mod 8.
inline bool mod8_spectrum(const QSeries& s, int n) {
  const std::int64_t want = ((n % 8) + 8) % 8;
  for (const auto& [e, v] : s.terms())
    if (v != 0 && e % 8 != want) return false;
  return true;
}

enum class JacobiMutation { None, DropSecondFactor };

struct JacobiReport {
  bool pass = true;
  std::int64_t order = 0;
  std::optional<std::int64_t> first_discrepancy;  // quarter-exponent
  BigInt lhs_coefficient = 0;
  BigInt rhs_coefficient = 0;
};

/// sum_{m>=0} q^{(m+1/2)^2} against q^{1/4} prod_{j>=1} (1+q^{2j})(1-q^{4j}),
/// compared through quarter-exponent M.
inline JacobiReport jacobi_check(std::int64_t order, JacobiMutation mutation = JacobiMutation::None) {
  if (order < 1) throw Error(ErrorKind::Precondition, "order must be >= 1");
  QSeries lhs(order);
  for (std::int64_t m = 0; (2 * m + 1) * (2 * m + 1) <= order; ++m) lhs.set((2 * m + 1) * (2 * m + 1), 1);

  QSeries rhs(order);
  rhs.set(1, 1);
  for (std::int64_t j = 1; 8 * j <= order; ++j) {
    QSeries f(order);
    f.set(0, 1);
    f.set(8 * j, 1);
    rhs = rhs * f;
    if (mutation == JacobiMutation::DropSecondFactor) continue;
    if (16 * j <= order) {
      QSeries g(order);
      g.set(0, 1);
      g.set(16 * j, -1);
      rhs = rhs * g;
    }
  }

  JacobiReport rep;
  rep.order = order;
  for (std::int64_t e = 0; e <= order; ++e) {
    const BigInt a = lhs.coefficient(e);
    const BigInt b = rhs.coefficient(e);
    if (a != b) {
      rep.pass = false;
      rep.first_discrepancy = e;
      rep.lhs_coefficient = a;
      rep.rhs_coefficient = b;
      break;
    }
  }
  return rep;
}

/// Splits L = Z^k + L' where Z^k is spanned by the norm-1 vectors (distinct
/// unit-vector pairs are orthogonal in an integral lattice).
struct UnitSplit {
  std::size_t units = 0;
  std::optional<Lattice> rest;  // absent when L = Z^k
};

inline UnitSplit split_unit_vectors(const Lattice& l, const EnumOptions& opts = {}) {
  const auto units = unit_vector_pairs(l, opts);
  const std::size_t n = l.rank();
  UnitSplit out{units.size(), std::nullopt};
  if (units.size() == n) return out;
  if (units.empty()) {
    out.rest = l;
    return out;
  }
  // x -> x - sum_u (x,u) u maps L onto the complement of the unit vectors.
  IntMatrix gens(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    gens(i, i) = 1;
    for (const auto& u : units) {
      BigInt p = 0;
      for (std::size_t j = 0; j < n; ++j) p += l.gram()(i, j) * u.coords[j];
      for (std::size_t j = 0; j < n; ++j) gens(i, j) -= p * u.coords[j];
    }
  }
  const IntMatrix h = hermite_normal_form(gens);
  out.rest = make_lattice(h * l.gram() * h.transpose(), l.name() + "'", l.provenance() + "|complement");
  return out;
}

/// Connected components of the graph on basis vectors with an edge where the
/// Gram entry is nonzero; each component spans an orthogonal summand.
inline std::vector<Lattice> orthogonal_blocks(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && g(i, j) != 0) {
          comp[j] = count;
          stack.push_back(j);
        }
    }
    ++count;
  }
  std::vector<Lattice> out;
  for (int c = 0; c < count; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    IntMatrix b(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = g(idx[i], idx[j]);
    out.push_back(make_lattice(std::move(b), "block" + std::to_string(c)));
  }
  return out;
}

/// theta_L computed as a product over an orthogonal decomposition: unit
/// vectors first, then the blocks of an LLL-reduced basis of the rest.
inline QSeries theta_by_blocks(const Lattice& l, std::int64_t max_norm, const EnumOptions& opts = {}) {
  if (l.rank() == 0) return theta_of(l, max_norm, opts);
  const UnitSplit split = split_unit_vectors(l, opts);
  QSeries s = theta_power(static_cast<int>(split.units), max_norm);
  if (!split.rest) return s;
  const LllResult red = lll_reduce_gram(split.rest->gram());
  for (const auto& b : orthogonal_blocks(red.gram)) s = s * theta_of(b, max_norm, opts);
  return s;
}

}  // namespace unimod
