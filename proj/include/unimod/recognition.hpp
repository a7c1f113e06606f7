#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "unimod/enumeration.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

/// One representative per +- pair of norm-1 vectors (first nonzero
/// coordinate positive), in lexicographic order.
inline std::vector<LatticeVector> unit_vector_pairs(const Lattice& l, const EnumOptions& opts = {}) {
  std::vector<LatticeVector> out;
  for (auto& v : enumerate_short(l, 1, opts)) {
    if (v.is_zero()) continue;
    auto it = std::find_if(v.coords.begin(), v.coords.end(), [](std::int64_t c) { return c != 0; });
    if (*it > 0) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// U with U^T G U = I when the lattice is Z^n, built from its n pairs of unit vectors.
inline std::optional<IntMatrix> recognize_zn(const Lattice& l, const EnumOptions& opts = {}) {
  const std::size_t n = l.rank();
  if (n == 0) return IntMatrix();
  const auto units = unit_vector_pairs(l, opts);
  if (units.size() != n) return std::nullopt;
  IntMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = units[j].coords[i];
  if (u.transpose() * l.gram() * u != IntMatrix::identity(n)) return std::nullopt;
  return u;
}

}  // namespace unimod
