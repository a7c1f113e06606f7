#pragma once

// Text formats.
//
//   lattice <name>            construction glue
//   dim <n>                   components <id> <id> ...
//   gram                      glue
//   <n rows of n integers>    <one row of rationals p/q per glue vector>
//
// '#' starts a comment; blank lines are ignored.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"
#include "unimod/root_lattices.hpp"

namespace unimod {

namespace io_detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{lineno, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline bool is_int_token(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline BigInt parse_int(const Token& t, std::size_t line) {
  if (!is_int_token(t.text)) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return BigInt(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

inline Rational parse_rational(const Token& t, std::size_t line) {
  const auto slash = t.text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t, line));
  const std::string p = t.text.substr(0, slash);
  const std::string q = t.text.substr(slash + 1);
  if (p.empty() || q.empty() || !is_int_token(p) || !is_int_token(q) || q[0] == '-' || q[0] == '+')
    throw ParseError(line, t.column, "expected a rational p/q, got '" + t.text + "'");
  const BigInt den(q);
  if (den == 0) throw ParseError(line, t.column, "zero denominator in '" + t.text + "'");
  return Rational(BigInt(p[0] == '+' ? p.substr(1) : p), den);
}

inline void expect_keyword(const Line& l, const std::string& kw, std::size_t args) {
  if (l.tokens[0].text != kw)
    throw ParseError(l.number, l.tokens[0].column, "expected '" + kw + "', got '" + l.tokens[0].text + "'");
  if (args != static_cast<std::size_t>(-1) && l.tokens.size() != args + 1) {
    const std::size_t col = l.tokens.size() > args + 1 ? l.tokens[args + 1].column : l.tokens.back().column;
    throw ParseError(l.number, col, "'" + kw + "' takes " + std::to_string(args) + " argument(s)");
  }
}

inline std::size_t end_column(const Line& l) {
  const Token& t = l.tokens.back();
  return t.column + t.text.size();
}

}  // namespace io_detail

inline Lattice parse_lattice_file(std::string_view text, const std::string& source = {}) {
  using namespace io_detail;
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty lattice file");
  expect_keyword(lines[0], "lattice", static_cast<std::size_t>(-1));
  if (lines[0].tokens.size() != 2) throw ParseError(lines[0].number, end_column(lines[0]), "'lattice' takes one name");
  const std::string name = lines[0].tokens[1].text;
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "missing 'dim' line");
  expect_keyword(lines[1], "dim", 1);
  const Token& dt = lines[1].tokens[1];
  const BigInt dim = parse_int(dt, lines[1].number);
  if (dim < 1 || dim > 4096) throw ParseError(lines[1].number, dt.column, "dimension must be a positive integer");
  const auto n = dim.convert_to<std::size_t>();
  if (lines.size() < 3) throw ParseError(lines[1].number + 1, 1, "missing 'gram' line");
  expect_keyword(lines[2], "gram", 0);
  if (lines.size() < 3 + n) {
    const std::size_t at = lines.back().number + 1;
    throw ParseError(at, 1, "expected " + std::to_string(n) + " gram rows, found " + std::to_string(lines.size() - 3));
  }
  if (lines.size() > 3 + n) throw ParseError(lines[3 + n].number, 1, "unexpected content after gram rows");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = lines[3 + i];
    if (row.tokens.size() != n) {
      const std::size_t col = row.tokens.size() > n ? row.tokens[n].column : end_column(row);
      throw ParseError(row.number, col,
                       "gram row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) g(i, j) = parse_int(row.tokens[j], row.number);
  }
  return make_lattice(std::move(g), name, source.empty() ? "file" : "file:" + source);
}

inline std::string emit_lattice(const Lattice& l) {
  std::ostringstream os;
  os << "lattice " << (l.name().empty() ? "unnamed" : l.name()) << "\n";
  os << "dim " << l.rank() << "\ngram\n";
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = 0; j < l.rank(); ++j) os << (j ? " " : "") << l.gram()(i, j);
    os << "\n";
  }
  return os.str();
}

inline GlueRecipe parse_glue_file(std::string_view text) {
  using namespace io_detail;
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty glue file");
  expect_keyword(lines[0], "construction", 1);
  if (lines[0].tokens[1].text != "glue")
    throw ParseError(lines[0].number, lines[0].tokens[1].column, "only 'construction glue' is supported");
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "missing 'components' line");
  expect_keyword(lines[1], "components", static_cast<std::size_t>(-1));
  if (lines[1].tokens.size() < 2) throw ParseError(lines[1].number, end_column(lines[1]), "no components listed");
  GlueRecipe r;
  for (std::size_t i = 1; i < lines[1].tokens.size(); ++i) {
    const Token& t = lines[1].tokens[i];
    try {
      r.components.push_back(parse_root_component(t.text));
    } catch (const Error& e) {
      throw ParseError(lines[1].number, t.column, "bad component '" + t.text + "'");
    }
  }
  const std::size_t rank = r.total_rank();
  if (lines.size() < 3) throw ParseError(lines[1].number + 1, 1, "missing 'glue' line");
  expect_keyword(lines[2], "glue", 0);
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const Line& row = lines[li];
    if (row.tokens.size() != rank) {
      const std::size_t col = row.tokens.size() > rank ? row.tokens[rank].column : end_column(row);
      throw ParseError(row.number, col,
                       "glue vector has " + std::to_string(row.tokens.size()) + " entries, expected " +
                           std::to_string(rank));
    }
    std::vector<Rational> v;
    v.reserve(rank);
    for (const auto& t : row.tokens) v.push_back(parse_rational(t, row.number));
    r.glue.push_back(std::move(v));
  }
  return r;
}

inline std::string emit_glue(const GlueRecipe& r) {
  std::ostringstream os;
  os << "construction glue\ncomponents";
  for (const auto& c : r.components) os << " " << c.id();
  os << "\nglue\n";
  for (const auto& v : r.glue) {
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j];
    os << "\n";
  }
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Format, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Lattice read_lattice_file(const std::string& path) { return parse_lattice_file(read_text_file(path), path); }

}  // namespace unimod
