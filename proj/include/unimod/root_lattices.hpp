#pragma once

// Root lattices in their Dynkin bases and glue constructions of unimodular
// overlattices.
//
// Node numbering (0-based):
//   A_k  path 0-1-...-(k-1)
//   D_k  path 0-1-...-(k-2), node k-1 attached to node k-3
//   E_k  Bourbaki: 0-2-3-4-...-(k-1) with node 1 attached to node 3

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"

namespace unimod {

struct RootComponent {
  char kind = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  std::string id() const { return std::string(1, kind) + std::to_string(rank); }
  friend bool operator==(const RootComponent&, const RootComponent&) = default;
};

inline RootComponent parse_root_component(const std::string& id) {
  if (id.size() < 2 || (id[0] != 'A' && id[0] != 'D' && id[0] != 'E'))
    throw Error(ErrorKind::UnknownId, "bad root component id '" + id + "'");
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i])))
      throw Error(ErrorKind::UnknownId, "bad root component id '" + id + "'");
  RootComponent c{id[0], std::stoi(id.substr(1))};
  const bool ok = (c.kind == 'A' && c.rank >= 1) || (c.kind == 'D' && c.rank >= 3) ||
                  (c.kind == 'E' && c.rank >= 6 && c.rank <= 8);
  if (!ok) throw Error(ErrorKind::UnknownId, "no root lattice " + id);
  return c;
}

inline IntMatrix dynkin_gram(const RootComponent& c) {
  const std::size_t k = static_cast<std::size_t>(c.rank);
  IntMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = 2;
  auto edge = [&g](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = -1; };
  switch (c.kind) {
    case 'A':
      for (std::size_t i = 0; i + 1 < k; ++i) edge(i, i + 1);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < k; ++i) edge(i, i + 1);
      edge(k - 3, k - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(1, 3);
      for (std::size_t i = 4; i + 1 < k; ++i) edge(i, i + 1);
      break;
    default:
      throw Error(ErrorKind::UnknownId, "unknown root type");
  }
  return g;
}

inline Lattice root_lattice(const RootComponent& c) {
  return make_lattice(dynkin_gram(c), c.id(), "catalog:" + c.id());
}

/// Fundamental weight i as coefficients in the simple-root basis (row i of G^-1).
inline std::vector<Rational> fundamental_weight(const RootComponent& c, std::size_t i) {
  return inverse_rational(dynkin_gram(c)).row(i);
}

struct GlueRecipe {
  std::vector<RootComponent> components;
  std::vector<std::vector<Rational>> glue;  // coefficients in the concatenated Dynkin bases

  std::size_t total_rank() const {
    std::size_t r = 0;
    for (const auto& c : components) r += static_cast<std::size_t>(c.rank);
    return r;
  }
};

inline IntMatrix component_sum_gram(const std::vector<RootComponent>& comps) {
  std::size_t total = 0;
  for (const auto& c : comps) total += static_cast<std::size_t>(c.rank);
  IntMatrix g(total, total);
  std::size_t off = 0;
  for (const auto& c : comps) {
    const IntMatrix b = dynkin_gram(c);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) g(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return g;
}

/// Integer span of the component bases and the glue vectors.
inline Lattice build_glue(const GlueRecipe& recipe, std::string name = {}) {
  if (recipe.components.empty()) throw Error(ErrorKind::GlueCode, "recipe has no components");
  const IntMatrix gr = component_sum_gram(recipe.components);
  const std::size_t r = gr.rows();
  for (std::size_t gi = 0; gi < recipe.glue.size(); ++gi) {
    const auto& v = recipe.glue[gi];
    if (v.size() != r)
      throw Error(ErrorKind::GlueCode, "glue vector " + std::to_string(gi + 1) + " has length " +
                                           std::to_string(v.size()) + ", expected " + std::to_string(r));
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i) s += v[i] * Rational(gr(i, j));
      if (!is_integer(s))
        throw Error(ErrorKind::GlueCode, "glue vector " + std::to_string(gi + 1) + " is not in the dual lattice");
    }
  }
  RatMatrix gens(r + recipe.glue.size(), r);
  for (std::size_t i = 0; i < r; ++i) gens(i, i) = 1;
  for (std::size_t gi = 0; gi < recipe.glue.size(); ++gi)
    for (std::size_t j = 0; j < r; ++j) gens(r + gi, j) = recipe.glue[gi][j];
  const ScaledBasis basis = integral_basis_from_rational_spans(gens);

  const IntMatrix scaled = basis.rows * gr * basis.rows.transpose();
  const BigInt den2 = basis.denominator * basis.denominator;
  IntMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (scaled(i, j) % den2 != 0) throw Error(ErrorKind::GlueCode, "glued lattice is not integral");
      gram(i, j) = scaled(i, j) / den2;
    }
  std::string prov = "glue:";
  for (const auto& c : recipe.components) prov += " " + c.id();
  Lattice l = make_lattice(std::move(gram), std::move(name), prov);
  if (!l.is_unimodular())
    throw Error(ErrorKind::GlueCode, "glued lattice has determinant " + l.determinant().str() + ", expected 1");
  return l;
}

/// D_n with its spinor glue vector; integral exactly when 4 | n.
inline GlueRecipe dplus_recipe(int n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorKind::UnknownId, "D" + std::to_string(n) + "+ needs even n >= 4");
  const RootComponent d{'D', n};
  return GlueRecipe{{d}, {fundamental_weight(d, static_cast<std::size_t>(n - 1))}};
}

/// A15 glued by its class of order 4 (minuscule weight omega_4).
inline GlueRecipe a15_recipe() {
  const RootComponent a{'A', 15};
  return GlueRecipe{{a}, {fundamental_weight(a, 3)}};
}

}  // namespace unimod
