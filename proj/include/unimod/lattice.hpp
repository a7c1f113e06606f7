#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"

namespace unimod {

/// Integer coordinates relative to a lattice basis.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }
  LatticeVector operator-() const {
    LatticeVector v{coords};
    for (auto& c : v.coords) c = -c;
    return v;
  }
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// A positive definite integral lattice given by its Gram matrix. Instances
/// are only produced by make_lattice() and friends, so the Gram matrix is
/// always symmetric and positive definite.
class Lattice {
 public:
  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }
  const BigInt& determinant() const noexcept { return det_; }
  bool is_unimodular() const noexcept { return det_ == 1; }

  // Even iff every basis vector has even norm; parity of |v|^2 is additive.
  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (is_odd(gram_(i, i))) return false;
    return true;
  }

  BigInt norm(const LatticeVector& v) const { return bilinear(gram_, v.coords, v.coords); }
  BigInt inner(const LatticeVector& a, const LatticeVector& b) const {
    return bilinear(gram_, a.coords, b.coords);
  }

  Lattice renamed(std::string name, std::string provenance) const {
    Lattice l = *this;
    l.name_ = std::move(name);
    l.provenance_ = std::move(provenance);
    return l;
  }

  friend Lattice make_lattice(IntMatrix gram, std::string name, std::string provenance);
  friend Lattice zero_lattice();

 private:
  IntMatrix gram_;
  std::string name_;
  std::string provenance_;
  BigInt det_ = 1;
};

inline Lattice make_lattice(IntMatrix gram, std::string name = {}, std::string provenance = {}) {
  if (!gram.square()) throw Error(ErrorKind::Format, "Gram matrix must be square");
  if (gram.rows() == 0) throw Error(ErrorKind::Dimension, "Gram matrix must have rank >= 1");
  if (!gram.is_symmetric()) throw Error(ErrorKind::Format, "Gram matrix is not symmetric");
  (void)cholesky_rational(gram);  // throws NotPositiveDefinite
  Lattice l;
  l.det_ = det_exact(gram);
  l.gram_ = std::move(gram);
  l.name_ = std::move(name);
  l.provenance_ = std::move(provenance);
  return l;
}

/// The rank-0 lattice {0}; its theta series is the constant 1.
inline Lattice zero_lattice() {
  Lattice l;
  l.name_ = "Z0";
  l.provenance_ = "catalog:Z0";
  return l;
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t na = a.rank();
  const std::size_t nb = b.rank();
  if (na == 0) return b;
  if (nb == 0) return a;
  IntMatrix g(na + nb, na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) g(na + i, na + j) = b.gram()(i, j);
  std::string name = (a.name().empty() ? "?" : a.name()) + "+" + (b.name().empty() ? "?" : b.name());
  return make_lattice(std::move(g), name, "sum(" + a.provenance() + "," + b.provenance() + ")");
}

/// Re-expresses the lattice in the basis given by the columns of u.
inline Lattice rebase(const Lattice& l, const IntMatrix& u) {
  if (u.rows() != l.rank() || !u.square()) throw Error(ErrorKind::Dimension, "change of basis has wrong shape");
  const BigInt du = det_exact(u);
  if (du != 1 && du != -1) throw Error(ErrorKind::Precondition, "change of basis is not unimodular");
  return make_lattice(u.transpose() * l.gram() * u, l.name(), l.provenance() + "|rebased");
}

inline LatticeVector apply_columns(const IntMatrix& u, const std::vector<std::int64_t>& y) {
  LatticeVector x;
  x.coords.assign(u.rows(), 0);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (y[j] != 0) s += u(i, j) * y[j];
    x.coords[i] = to_int64(s);
  }
  return x;
}

/// Representative w of the characteristic coset w + 2L: (v, w) = |v|^2 mod 2 for all v.
struct CharCoset {
  LatticeVector w;
  Lattice lattice;

  bool contains(const LatticeVector& x) const {
    if (x.size() != w.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (((x.coords[i] - w.coords[i]) & 1) != 0) return false;
    return true;
  }
};

inline CharCoset characteristic_coset(const Lattice& l) {
  if (!l.is_unimodular())
    throw Error(ErrorKind::Precondition, "characteristic coset needs a unimodular lattice");
  const ParityVector x = solve_mod2(l.gram(), diagonal_parity(l.gram()));
  LatticeVector w;
  w.coords.assign(x.bits.begin(), x.bits.end());
  return CharCoset{std::move(w), l};
}

}  // namespace unimod
