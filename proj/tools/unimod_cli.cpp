// unimod: command-line front end for the lattice toolkit.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unimod/unimod.hpp"

using json = nlohmann::ordered_json;
using namespace unimod;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string output = "text";
  unsigned threads = 1;
  std::string catalog_id;
  std::string file;

  bool json_mode() const { return output == "json"; }
  EnumOptions enum_opts() const {
    EnumOptions o;
    o.threads = threads;
    return o;
  }
};

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json vec(const LatticeVector& v) { return v.coords; }

std::string vec_text(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v.coords[i]);
  return s + ")";
}

json matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(big(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Lattice load_lattice(const Options& o) {
  if (o.catalog_id.empty() == o.file.empty())
    throw Error(ErrorKind::Precondition, "give exactly one of --catalog <id> or --file <path>");
  if (!o.catalog_id.empty()) return catalog(o.catalog_id);
  return read_lattice_file(o.file);
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_mode())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DataIntegrity:
    case ErrorKind::Extraction:
      return kFail;
    default:
      return kUsage;
  }
}

// --- subcommands ---------------------------------------------------------

int cmd_info(const Options& o) {
  const Lattice l = load_lattice(o);
  json j = {{"report", "info"},        {"name", l.name()},           {"rank", l.rank()},
            {"determinant", big(l.determinant())}, {"unimodular", l.is_unimodular()},
            {"even", l.is_even()},     {"provenance", l.provenance()}, {"gram", matrix(l.gram())}};
  std::ostringstream t;
  t << "name=" << l.name() << "\nrank=" << l.rank() << "\ndeterminant=" << l.determinant()
    << "\nunimodular=" << (l.is_unimodular() ? "yes" : "no") << "\neven=" << (l.is_even() ? "yes" : "no")
    << "\nprovenance=" << l.provenance() << "\n";
  emit(o, j, t.str());
  return kPass;
}

int cmd_shortvec(const Options& o, std::int64_t bound) {
  const Lattice l = load_lattice(o);
  const auto vs = enumerate_short(l, bound, o.enum_opts());
  json arr = json::array();
  std::ostringstream t;
  t << "count=" << vs.size() << "\n";
  for (const auto& v : vs) {
    const BigInt nv = l.norm(v);
    arr.push_back({{"norm", big(nv)}, {"coords", vec(v)}});
    t << nv << " " << vec_text(v) << "\n";
  }
  emit(o, {{"report", "shortvec"}, {"lattice", l.name()}, {"bound", bound}, {"count", vs.size()}, {"vectors", arr}},
       t.str());
  return kPass;
}

json series_json(const QSeries& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"quarter_exponent", e}, {"coefficient", big(c)}});
  return {{"truncation", s.truncation()}, {"terms", terms}};
}

int cmd_theta(const Options& o, std::int64_t max_norm, bool dump) {
  const Lattice l = load_lattice(o);
  const QSeries s = theta_of(l, max_norm, o.enum_opts());
  std::ostringstream t;
  if (dump) {
    t << s.dump();
  } else {
    t << "coefficients=";
    for (std::int64_t m = 0; m <= max_norm; ++m) t << (m ? "," : "") << s.coefficient(4 * m);
    t << "\nseries=" << s.to_string() << "\n";
  }
  json coeffs = json::array();
  for (std::int64_t m = 0; m <= max_norm; ++m) coeffs.push_back(big(s.coefficient(4 * m)));
  emit(o, {{"report", "theta"}, {"lattice", l.name()}, {"max_norm", max_norm}, {"coefficients", coeffs},
           {"series", series_json(s)}},
       t.str());
  return kPass;
}

int cmd_shadow(const Options& o, std::int64_t max_quarter, bool dump) {
  const Lattice l = load_lattice(o);
  const QSeries s = shadow_theta(l, max_quarter, o.enum_opts());
  const bool spectrum = mod8_spectrum(s, static_cast<int>(l.rank()));
  std::ostringstream t;
  if (dump)
    t << s.dump();
  else
    t << "series=" << s.to_string() << "\nmod8_spectrum=" << (spectrum ? "ok" : "violated") << "\n";
  emit(o, {{"report", "shadow"}, {"lattice", l.name()}, {"max_quarter_exponent", max_quarter},
           {"mod8_spectrum", spectrum}, {"series", series_json(s)}},
       t.str());
  return spectrum ? kPass : kFail;
}

int cmd_char(const Options& o) {
  const Lattice l = load_lattice(o);
  const CharMinReport r = min_characteristic(l, o.enum_opts());
  std::ostringstream t;
  t << "min_norm=" << r.min_norm << " count=" << r.count_at_min << "\n";
  json w = json::array();
  for (const auto& v : r.witnesses) {
    t << "witness " << vec_text(v) << "\n";
    w.push_back(vec(v));
  }
  emit(o, {{"report", "char"}, {"lattice", l.name()}, {"rank", l.rank()}, {"min_norm", r.min_norm},
           {"count", big(r.count_at_min)}, {"witnesses", w}},
       t.str());
  return kPass;
}

int cmd_roots(const Options& o) {
  const Lattice l = load_lattice(o);
  const RootSystemReport r = identify_roots(l, o.enum_opts());
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"type", std::string(1, c.kind) + std::to_string(c.rank)}, {"multiplicity", c.multiplicity}});
  std::ostringstream t;
  t << "root_system=" << r.label() << " total_roots=" << r.total_roots << " rank_of_span=" << r.rank_of_span << "\n";
  emit(o, {{"report", "roots"}, {"lattice", l.name()}, {"root_system", r.label()}, {"components", comps},
           {"total_roots", r.total_roots}, {"rank_of_span", r.rank_of_span}},
       t.str());
  return kPass;
}

int cmd_verify_theorem(const Options& o) {
  const Lattice l = load_lattice(o);
  const TheoremVerdict v = verify_theorem(l, o.enum_opts());
  std::ostringstream t;
  t << "verdict=" << to_string(v.verdict) << " n=" << v.n << " min_char_norm=" << v.min_char_norm << "\n";
  json j = {{"report", "verify-theorem"}, {"lattice", v.lattice_id}, {"n", v.n},
            {"verdict", to_string(v.verdict)}, {"min_char_norm", v.min_char_norm},
            {"min_char_count", big(v.min_char_count)}, {"theta_checked", v.theta_checked},
            {"theta_equal_to_zn", v.theta_equal_to_zn}};
  if (v.witness) {
    j["witness"] = vec(*v.witness);
    t << "witness " << vec_text(*v.witness) << "\n";
  }
  if (v.zn_basis) {
    j["zn_basis"] = matrix(*v.zn_basis);
    t << "zn_basis_columns=" << v.zn_basis->cols() << " (U^T G U = I checked)\n";
  }
  if (v.verdict == Verdict::Inconsistent) j["reason"] = "theta comparison or unit-vector recognition failed";
  emit(o, j, t.str());
  return v.verdict == Verdict::Inconsistent ? kFail : kPass;
}

int cmd_verify_table(const Options& o) {
  const TableReport rep = verify_table(o.enum_opts());
  json rows = json::array();
  std::ostringstream t;
  for (const auto& r : rep.rows) {
    rows.push_back({{"id", r.entry.id},
                    {"r", r.entry.r},
                    {"status", to_string(r.status)},
                    {"root_system_expected", r.entry.label},
                    {"root_system", r.roots},
                    {"norm1_count", r.norm1},
                    {"norm2_count", r.norm2},
                    {"norm2_expected", r.expected.norm2},
                    {"min_char", r.min_char},
                    {"min_char_expected", r.expected.min_char},
                    {"count_at_min", big(r.count_at_min)},
                    {"count_at_min_expected", big(r.expected.count_at_min)},
                    {"seconds", r.seconds},
                    {"message", r.message}});
    t << to_string(r.status) << " " << r.entry.id << " r=" << r.entry.r;
    if (r.status != RowStatus::Skipped)
      t << " roots=" << r.roots << " norm1=" << r.norm1 << " norm2=" << r.norm2 << "/" << r.expected.norm2
        << " min_char=" << r.min_char << "/" << r.expected.min_char << " count=" << r.count_at_min << "/"
        << r.expected.count_at_min;
    if (!r.message.empty()) t << " (" << r.message << ")";
    t << "\n";
  }
  t << "table " << (rep.pass ? "PASS" : "FAIL") << "\n";
  emit(o, {{"report", "verify-table"}, {"pass", rep.pass}, {"rows", rows}}, t.str());
  return rep.pass ? kPass : kFail;
}

std::vector<double> parse_numbers(const std::string& s, std::size_t count, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad number '" + item + "' in " + what);
    }
  }
  if (out.size() != count) throw Error(ErrorKind::Parse, what + " needs " + std::to_string(count) + " values");
  return out;
}

int cmd_modular(const Options& o, const std::string& rel_id, const std::string& point, double tol,
                const std::string& g_text) {
  const Relation rel = parse_relation(rel_id);
  const auto xy = parse_numbers(point, 2, "--point");
  const HalfPlanePoint t(xy[0], xy[1]);
  std::optional<GroupElement> g;
  if (!g_text.empty()) {
    const auto v = parse_numbers(g_text, 4, "--g");
    for (double x : v)
      if (x != std::floor(x)) throw Error(ErrorKind::Parse, "--g entries must be integers");
    g = GroupElement(static_cast<std::int64_t>(v[0]), static_cast<std::int64_t>(v[1]),
                     static_cast<std::int64_t>(v[2]), static_cast<std::int64_t>(v[3]));
  }
  const Lattice l = load_lattice(o);
  ThetaEvaluator ev(l, o.enum_opts());
  const RelationReport r = check_relation(ev, rel, t, tol, g);
  std::ostringstream txt;
  txt.precision(17);
  txt << "relation=" << to_string(rel) << " point=" << t.x << "," << t.y << "\nlhs=" << r.lhs << "\nrhs=" << r.rhs
      << "\nresidual=" << r.residual << " tail=" << r.tail << " tol=" << tol << "\n";
  if (r.epsilon_k) txt << "epsilon=e^(2 pi i " << *r.epsilon_k << "/8)\n";
  txt << (r.pass ? "PASS" : "FAIL") << "\n";
  json j = {{"report", "modular"},
            {"lattice", l.name()},
            {"relation", to_string(rel)},
            {"point", {t.x, t.y}},
            {"lhs", {r.lhs.real(), r.lhs.imag()}},
            {"rhs", {r.rhs.real(), r.rhs.imag()}},
            {"residual", r.residual},
            {"tail", r.tail},
            {"tol", tol},
            {"pass", r.pass}};
  if (r.epsilon_k) j["epsilon_k"] = *r.epsilon_k;
  emit(o, j, txt.str());
  return r.pass ? kPass : kFail;
}

int cmd_catalog_list(const Options& o) {
  json arr = json::array();
  std::ostringstream t;
  for (const auto& c : catalog_list()) {
    arr.push_back({{"id", c.id}, {"description", c.description}});
    t << c.id << "\t" << c.description << "\n";
  }
  emit(o, {{"report", "catalog-list"}, {"entries", arr}}, t.str());
  return kPass;
}

int cmd_catalog_build(const Options& o, const std::string& id, const std::string& out) {
  const Lattice l = catalog(id);
  if (l.rank() == 0) throw Error(ErrorKind::Dimension, "the rank-0 lattice has no file form");
  const std::string text = emit_lattice(l);
  if (!out.empty()) {
    std::FILE* f = std::fopen(out.c_str(), "wb");
    if (!f) throw Error(ErrorKind::Format, "cannot write '" + out + "'");
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  if (o.json_mode())
    std::cout << json{{"report", "catalog-build"}, {"id", id}, {"rank", l.rank()}, {"gram", matrix(l.gram())}}.dump(2)
              << "\n";
  else if (out.empty())
    std::cout << text;
  else
    std::cout << "wrote " << out << "\n";
  return kPass;
}

int cmd_jacobi(const Options& o, std::int64_t order, bool mutate) {
  const JacobiReport r = jacobi_check(order, mutate ? JacobiMutation::DropSecondFactor : JacobiMutation::None);
  std::ostringstream t;
  t << "jacobi order=" << order << " " << (r.pass ? "PASS" : "FAIL");
  json j = {{"report", "jacobi"}, {"order", order}, {"mutated", mutate}, {"pass", r.pass}};
  if (r.first_discrepancy) {
    t << " first_discrepancy=q^{" << *r.first_discrepancy << "/4} lhs=" << r.lhs_coefficient
      << " rhs=" << r.rhs_coefficient;
    j["first_discrepancy"] = *r.first_discrepancy;
    j["lhs_coefficient"] = big(r.lhs_coefficient);
    j["rhs_coefficient"] = big(r.rhs_coefficient);
  }
  t << "\n";
  emit(o, j, t.str());
  return r.pass ? kPass : kFail;
}

void add_lattice_options(CLI::App* sub, Options& o) {
  sub->add_option("--catalog", o.catalog_id, "catalog id (see 'catalog list')");
  sub->add_option("--file", o.file, "lattice file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unimod - theta series, shadows and characteristic vectors of unimodular lattices"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));

  auto* info = app.add_subcommand("info", "basic invariants");
  add_lattice_options(info, o);

  std::int64_t bound = 0;
  auto* shortvec = app.add_subcommand("shortvec", "all vectors with |v|^2 <= B");
  add_lattice_options(shortvec, o);
  shortvec->add_option("--bound", bound, "norm bound")->required()->check(CLI::NonNegativeNumber);

  std::int64_t max_norm = 0;
  bool dump = false;
  auto* theta = app.add_subcommand("theta", "theta series through norm N");
  add_lattice_options(theta, o);
  theta->add_option("--max-norm", max_norm)->required()->check(CLI::NonNegativeNumber);
  theta->add_flag("--dump", dump, "print '<quarter_exponent> <coefficient>' lines");

  auto* shadow = app.add_subcommand("shadow", "characteristic vectors x with |x|^2 <= N (q^{N/4})");
  add_lattice_options(shadow, o);
  shadow->add_option("--max-norm", max_norm)->required()->check(CLI::NonNegativeNumber);
  shadow->add_flag("--dump", dump, "print '<quarter_exponent> <coefficient>' lines");

  bool want_min = false;
  auto* chr = app.add_subcommand("char", "shortest characteristic vectors");
  add_lattice_options(chr, o);
  chr->add_flag("--min", want_min, "report the minimum norm and its count")->required();

  auto* roots = app.add_subcommand("roots", "root system of the norm-2 vectors");
  add_lattice_options(roots, o);

  auto* verify = app.add_subcommand("verify", "theorem or table verification");
  verify->require_subcommand(1);
  auto* vthm = verify->add_subcommand("theorem", "Z^n recognition from the characteristic minimum");
  add_lattice_options(vthm, o);
  auto* vtab = verify->add_subcommand("table", "check every table row against the formulas");

  std::string rel_id, point, g_text;
  double tol = kDefaultTol;
  auto* modular = app.add_subcommand("modular", "numeric check of a transformation law");
  add_lattice_options(modular, o);
  modular
      ->add_option("--relation", rel_id,
                   "t2-invariance | poisson-s | general-g | t-shift | shadow-ts | shadow-shift")
      ->required();
  modular->add_option("--point", point, "x,y with y >= 0.2")->required();
  modular->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  modular->add_option("--g", g_text, "a,b,c,d for general-g (default S T^2 S)");

  auto* cat = app.add_subcommand("catalog", "named lattices");
  cat->require_subcommand(1);
  auto* clist = cat->add_subcommand("list", "list catalog ids");
  std::string build_id, build_out;
  auto* cbuild = cat->add_subcommand("build", "print a catalog lattice in file format");
  cbuild->add_option("id", build_id)->required();
  cbuild->add_option("--out", build_out, "write to a file instead of stdout");

  std::int64_t order = 0;
  bool mutate = false;
  auto* jacobi = app.add_subcommand("jacobi", "triple product identity through q^{M/4}");
  jacobi->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  jacobi->add_flag("--mutate", mutate, "drop the (1 - q^{4j}) factors (must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(o);
    if (shortvec->parsed()) return cmd_shortvec(o, bound);
    if (theta->parsed()) return cmd_theta(o, max_norm, dump);
    if (shadow->parsed()) return cmd_shadow(o, max_norm, dump);
    if (chr->parsed()) return cmd_char(o);
    if (roots->parsed()) return cmd_roots(o);
    if (vthm->parsed()) return cmd_verify_theorem(o);
    if (vtab->parsed()) return cmd_verify_table(o);
    if (modular->parsed()) return cmd_modular(o, rel_id, point, tol, g_text);
    if (clist->parsed()) return cmd_catalog_list(o);
    if (cbuild->parsed()) return cmd_catalog_build(o, build_id, build_out);
    if (jacobi->parsed()) return cmd_jacobi(o, order, mutate);
  } catch (const Error& e) {
    if (o.json_mode()) {
      json j = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
      if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["error"]["line"] = pe->line();
        j["error"]["column"] = pe->column();
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "unimod: " << e.what() << "\n";
    }
    return exit_code_for(e);
  }
  return kUsage;
}
