#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "unimod/catalog.hpp"
#include "unimod/enumeration.hpp"
#include "unimod/error.hpp"
#include "unimod/lattice.hpp"
#include "unimod/recognition.hpp"
#include "unimod/theta.hpp"

namespace unimod {

enum class Verdict { IsZn, HasShortCharVector, Inconsistent };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IsZn: return "IsZn";
    case Verdict::HasShortCharVector: return "HasShortCharVector";
    case Verdict::Inconsistent: return "Inconsistent";
  }
  return "?";
}

struct TheoremVerdict {
  std::string lattice_id;
  int n = 0;
  std::int64_t min_char_norm = 0;
  BigInt min_char_count = 0;
  bool theta_checked = false;
  bool theta_equal_to_zn = false;  // through norm n + 8
  std::optional<IntMatrix> zn_basis;
  std::optional<LatticeVector> witness;  // short characteristic vector
  Verdict verdict = Verdict::Inconsistent;
};

/// A unimodular lattice without characteristic vectors of norm < n is Z^n.
/// Below n a witness is returned; otherwise the theta series and the unit
/// vectors must both identify Z^n.
inline TheoremVerdict verify_theorem(const Lattice& l, const EnumOptions& opts = {}) {
  if (!l.is_unimodular()) throw Error(ErrorKind::Precondition, "verify_theorem needs a unimodular lattice");
  TheoremVerdict v;
  v.lattice_id = l.name();
  v.n = static_cast<int>(l.rank());
  const CharMinReport mc = min_characteristic(l, opts);
  v.min_char_norm = mc.min_norm;
  v.min_char_count = mc.count_at_min;
  if (mc.min_norm < v.n) {
    v.witness = mc.witnesses.front();
    v.verdict = Verdict::HasShortCharVector;
    return v;
  }
  const std::int64_t n_cmp = v.n + 8;
  v.theta_checked = true;
  v.theta_equal_to_zn = theta_by_blocks(l, n_cmp, opts).agrees_through(theta_power(v.n, n_cmp), 4 * n_cmp + 3);
  v.zn_basis = recognize_zn(l, opts);
  v.verdict = (v.theta_equal_to_zn && v.zn_basis) ? Verdict::IsZn : Verdict::Inconsistent;
  return v;
}

enum class RowStatus { Pass, Fail, Skipped };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct TableRow {
  TableEntry entry;
  TableExpectation expected;
  RowStatus status = RowStatus::Skipped;
  std::string message;
  bool unimodular = false;
  std::uint64_t norm1 = 0;
  std::uint64_t norm2 = 0;
  std::string roots;
  std::int64_t min_char = 0;
  BigInt count_at_min = 0;
  bool roots_ok = false;
  bool norm_ok = false;
  bool min_ok = false;
  bool count_ok = false;
  double seconds = 0;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool pass = false;  // no row failed and every core row passed
};

inline const std::vector<std::string>& core_table_ids() {
  static const std::vector<std::string> ids = {"E8", "D12+", "A15+", "A1^22+", "O23"};
  return ids;
}

inline TableRow verify_table_row(const TableEntry& e, const EnumOptions& opts = {}) {
  TableRow row;
  row.entry = e;
  row.expected = table_expectation(e.r);
  if (!table_entry_available(e)) {
    row.status = RowStatus::Skipped;
    row.message = "data file " + table_file_path(e).string() + " not found";
    return row;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Lattice l = load_table_entry(e);
    row.unimodular = l.is_unimodular();
    const NormHistogram h = norm_histogram(l, 2, opts);
    row.norm1 = h[1];
    row.norm2 = h[2];
    const RootSystemReport rs = identify_roots(l, opts);
    row.roots = rs.label();
    const CharMinReport mc = min_characteristic(l, opts);
    row.min_char = mc.min_norm;
    row.count_at_min = mc.count_at_min;
    row.norm_ok = row.unimodular && row.norm1 == row.expected.norm1 && row.norm2 == row.expected.norm2 &&
                  rs.total_roots == row.norm2;
    row.roots_ok = rs.components == parse_root_label(e.label);
    row.min_ok = row.min_char == row.expected.min_char;
    row.count_ok = row.count_at_min == row.expected.count_at_min;
    row.status = (row.norm_ok && row.roots_ok && row.min_ok && row.count_ok) ? RowStatus::Pass : RowStatus::Fail;
    if (row.status == RowStatus::Fail) row.message = "computed values differ from the table formulas";
  } catch (const Error& err) {
    row.status = RowStatus::Fail;
    row.message = err.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline TableReport verify_table(const EnumOptions& opts = {}) {
  TableReport rep;
  rep.pass = true;
  for (const auto& e : table_entries()) {
    rep.rows.push_back(verify_table_row(e, opts));
    const TableRow& row = rep.rows.back();
    const bool core = std::find(core_table_ids().begin(), core_table_ids().end(), e.id) != core_table_ids().end();
    if (row.status == RowStatus::Fail || (core && row.status != RowStatus::Pass)) rep.pass = false;
  }
  return rep;
}

}  // namespace unimod
