#pragma once

// Named lattices.
//
//   Z<n>           the standard lattice (Z0 is the rank-0 lattice)
//   A<k> D<k> E6 E7 E8   root lattices (k >= 1 for A, k >= 3 for D)
//   D<n>+          D_n with spinor glue, integral iff 4 | n
//   table ids      E8, D12+, E7^2+, A15+, ..., A1^22+, O23 (the 14 glued
//                  lattices with no norm-1 vectors); multi-component labels
//                  such as E7^2 are accepted without the '+'

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "unimod/enumeration.hpp"
#include "unimod/error.hpp"
#include "unimod/lattice.hpp"
#include "unimod/lattice_io.hpp"
#include "unimod/root_lattices.hpp"

#ifndef UNIMOD_DATA_DIR
#define UNIMOD_DATA_DIR "data"
#endif

namespace unimod {

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("LAT_DATA_DIR"); env && *env) return env;
  return UNIMOD_DATA_DIR;
}

/// Row r of the table: expected counts follow from r alone.
struct TableExpectation {
  int r = 0;
  std::uint64_t norm1 = 0;
  std::uint64_t norm2 = 0;
  std::int64_t min_char = 0;
  BigInt count_at_min = 0;
};

inline TableExpectation table_expectation(int r) {
  TableExpectation e;
  e.r = r;
  e.norm2 = 2 * static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(23 - r);
  e.min_char = r - 8;
  // 2^(r-11) * r, an integer for every table row (r = 8 gives 1)
  BigInt num = BigInt(r);
  if (r >= 11) {
    e.count_at_min = num << (r - 11);
  } else {
    const BigInt den = BigInt(1) << (11 - r);
    if (num % den != 0) throw Error(ErrorKind::Precondition, "2^(r-11) r is not an integer");
    e.count_at_min = num / den;
  }
  return e;
}

struct TableEntry {
  int r = 0;
  std::string label;  // root system of the norm-2 vectors ("O23" for the empty one)
  std::string id;     // catalog id
  std::string file;   // bundled data file under <data>/table, empty if built in code
};

inline const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> rows = {
      {8, "E8", "E8", ""},
      {12, "D12", "D12+", ""},
      {14, "E7^2", "E7^2+", "E7_2.glue"},
      {15, "A15", "A15+", ""},
      {16, "D8^2", "D8^2+", "D8_2.glue"},
      {17, "A11E6", "A11E6+", "A11E6.glue"},
      {18, "D6^3", "D6^3+", "D6_3.glue"},
      {18, "A9^2", "A9^2+", "A9_2.glue"},
      {19, "A7^2D5", "A7^2D5+", "A7_2D5.glue"},
      {20, "D4^5", "D4^5+", "D4_5.glue"},
      {20, "A5^4", "A5^4+", "A5_4.glue"},
      {21, "A3^7", "A3^7+", "A3_7.glue"},
      {22, "A1^22", "A1^22+", "A1_22.glue"},
      {23, "O23", "O23", "O23.lat"},
  };
  return rows;
}

inline const TableEntry* find_table_entry(const std::string& id) {
  for (const auto& e : table_entries()) {
    if (e.id == id) return &e;
    const bool multi = e.label.find('^') != std::string::npos || e.label == "A11E6";
    if (multi && e.label == id) return &e;
  }
  return nullptr;
}

inline std::filesystem::path table_file_path(const TableEntry& e) { return data_dir() / "table" / e.file; }

/// True when the entry can be built (code construction or data file present).
inline bool table_entry_available(const TableEntry& e) {
  return e.file.empty() || std::filesystem::exists(table_file_path(e));
}

namespace catalog_detail {

inline Lattice build_table_raw(const TableEntry& e) {
  if (e.id == "E8") return root_lattice({'E', 8}).renamed("E8", "catalog:E8");
  if (e.id == "D12+") return build_glue(dplus_recipe(12), "D12+");
  if (e.id == "A15+") return build_glue(a15_recipe(), "A15+");
  const auto path = table_file_path(e);
  if (!std::filesystem::exists(path))
    throw Error(ErrorKind::DataIntegrity, "missing data file " + path.string() + " for " + e.id);
  const std::string text = read_text_file(path.string());
  if (path.extension() == ".lat") return parse_lattice_file(text, path.string()).renamed(e.id, "table:" + e.file);
  return build_glue(parse_glue_file(text), e.id).renamed(e.id, "table:" + e.file);
}

}  // namespace catalog_detail

/// Builds a table entry and checks unimodularity, norm-1 and norm-2 counts.
inline Lattice load_table_entry(const TableEntry& e) {
  std::optional<Lattice> l;
  try {
    l = catalog_detail::build_table_raw(e);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::DataIntegrity) throw;
    throw Error(ErrorKind::DataIntegrity, e.id + ": " + err.what());
  }
  const TableExpectation x = table_expectation(e.r);
  if (static_cast<int>(l->rank()) != e.r)
    throw Error(ErrorKind::DataIntegrity, e.id + ": rank " + std::to_string(l->rank()) + ", expected " +
                                              std::to_string(e.r));
  if (!l->is_unimodular()) throw Error(ErrorKind::DataIntegrity, e.id + ": not unimodular");
  const NormHistogram h = norm_histogram(*l, 2);
  if (h[1] != x.norm1) throw Error(ErrorKind::DataIntegrity, e.id + ": has norm-1 vectors");
  if (h[2] != x.norm2)
    throw Error(ErrorKind::DataIntegrity, e.id + ": " + std::to_string(h[2]) + " norm-2 vectors, expected " +
                                              std::to_string(x.norm2));
  return *l;
}

namespace catalog_detail {
inline std::optional<int> suffix_int(const std::string& id, std::size_t from, std::size_t to) {
  if (from >= to || to > id.size()) return std::nullopt;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
  if (to - from > 4) return std::nullopt;
  return std::stoi(id.substr(from, to - from));
}
}  // namespace catalog_detail

inline Lattice catalog(const std::string& id) {
  if (const TableEntry* e = find_table_entry(id)) return load_table_entry(*e);
  if (!id.empty() && id[0] == 'Z') {
    if (auto n = catalog_detail::suffix_int(id, 1, id.size())) {
      if (*n == 0) return zero_lattice();
      return make_lattice(IntMatrix::identity(static_cast<std::size_t>(*n)), id, "catalog:" + id);
    }
  }
  if (id.size() >= 3 && id[0] == 'D' && id.back() == '+') {
    if (auto n = catalog_detail::suffix_int(id, 1, id.size() - 1)) {
      if (*n % 4 != 0 && *n >= 4 && *n % 2 == 0)
        throw Error(ErrorKind::GlueCode, id + " is not integral (needs 4 | n)");
      return build_glue(dplus_recipe(*n), id).renamed(id, "catalog:" + id);
    }
  }
  try {
    return root_lattice(parse_root_component(id));
  } catch (const Error&) {
  }
  throw Error(ErrorKind::UnknownId, "unknown catalog id '" + id + "'");
}

struct CatalogListing {
  std::string id;
  std::string description;
};

inline std::vector<CatalogListing> catalog_list() {
  std::vector<CatalogListing> out = {
      {"Z<n>", "standard lattice Z^n, n >= 0"},
      {"A<k>", "root lattice A_k, k >= 1"},
      {"D<k>", "root lattice D_k, k >= 3"},
      {"E6", "root lattice E6"},
      {"E7", "root lattice E7"},
      {"E8", "root lattice E8 (even unimodular)"},
      {"D<n>+", "D_n glued by a spinor class, unimodular for 4 | n"},
  };
  for (const auto& e : table_entries()) {
    std::string d = "table r=" + std::to_string(e.r) + ", roots " + (e.label == "O23" ? "none" : e.label);
    d += e.file.empty() ? ", built in code" : ", data " + e.file;
    out.push_back({e.id, d});
  }
  return out;
}

}  // namespace unimod
