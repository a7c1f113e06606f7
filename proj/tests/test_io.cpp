#include <gtest/gtest.h>

#include <filesystem>

#include "support/oracles.hpp"

using namespace unimod;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_lattice_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(LatticeFile, OneByOne) {
  const Lattice l = parse_lattice_file("lattice Z1\ndim 1\ngram\n1\n");
  EXPECT_EQ(l.name(), "Z1");
  EXPECT_EQ(l.gram(), IntMatrix::identity(1));
}

TEST(LatticeFile, CommentsAndBlankLines) {
  const Lattice l = parse_lattice_file("# header\n\nlattice A2   # two\ndim 2\ngram\n2 1\n\n1 2 # end\n");
  EXPECT_EQ(l.determinant(), 3);
}

TEST(LatticeFile, BundledE8) {
  const auto path = std::filesystem::path(UNIMOD_DATA_DIR) / "catalog" / "E8.lat";
  const Lattice l = read_lattice_file(path.string());
  EXPECT_EQ(l.rank(), 8u);
  EXPECT_EQ(oracle::cofactor_det(l.gram()), 1);
  EXPECT_EQ(l.gram(), catalog("E8").gram());
}

TEST(LatticeFile, ShortRowIsLocated) {
  const ParseError e = parse_error_of("lattice X\ndim 3\ngram\n1 0 0\n0 1\n0 0 1\n");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 4u);
}

TEST(LatticeFile, ThreeByTwoBlock) {
  const ParseError e = parse_error_of("lattice X\ndim 3\ngram\n1 0\n0 1\n0 0\n");
  EXPECT_EQ(e.line(), 4u);
}

TEST(LatticeFile, OtherErrors) {
  EXPECT_EQ(parse_error_of("lattce X\ndim 1\ngram\n1\n").line(), 1u);
  EXPECT_EQ(parse_error_of("lattice X\ndim two\ngram\n1\n").line(), 2u);
  const ParseError bad = parse_error_of("lattice X\ndim 2\ngram\n1 0\n0 x1\n");
  EXPECT_EQ(bad.line(), 5u);
  EXPECT_EQ(bad.column(), 3u);
  EXPECT_EQ(parse_error_of("lattice X\ndim 1\ngram\n").line(), 4u);
  EXPECT_EQ(parse_error_of("lattice X\ndim 1\ngram\n1\n2\n").line(), 5u);
  EXPECT_EQ(parse_error_of("").kind(), ErrorKind::Parse);
}

TEST(LatticeFile, SemanticErrorsAreNotParseErrors) {
  try {
    parse_lattice_file("lattice X\ndim 2\ngram\n1 2\n2 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveDefinite);
  }
}

TEST(LatticeFile, RoundTrip) {
  for (const auto& id : {"Z3", "E8", "D12+", "A15+", "O23", "A2"}) {
    const Lattice l = catalog(id);
    const std::string text = emit_lattice(l);
    const Lattice back = parse_lattice_file(text);
    EXPECT_EQ(back.gram(), l.gram()) << id;
    EXPECT_EQ(emit_lattice(back), text) << id;
  }
}

TEST(GlueFile, ParseAndRoundTrip) {
  const std::string text = "construction glue\ncomponents D4 A1\nglue\n1/2 0 0 1 1/2\n";
  const GlueRecipe r = parse_glue_file(text);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].id(), "D4");
  EXPECT_EQ(r.glue[0][0], Rational(1, 2));
  EXPECT_EQ(r.glue[0][3], 1);
  const GlueRecipe again = parse_glue_file(emit_glue(r));
  EXPECT_EQ(again.components, r.components);
  EXPECT_EQ(again.glue, r.glue);
}

TEST(GlueFile, Errors) {
  try {
    parse_glue_file("construction glue\ncomponents D4 Q2\nglue\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
  }
  try {
    parse_glue_file("construction glue\ncomponents A2\nglue\n1/3 2/3 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_glue_file("construction glue\ncomponents A2\nglue\n1/0 0\n"), ParseError);
}

TEST(GlueFile, BundledTableFilesParse) {
  for (const auto& e : table_entries()) {
    if (e.file.empty() || e.file.ends_with(".lat")) continue;
    const GlueRecipe r = parse_glue_file(read_text_file(table_file_path(e).string()));
    EXPECT_EQ(static_cast<int>(r.total_rank()), e.r) << e.id;
  }
}

TEST(DataDir, EnvironmentOverride) {
  const auto saved = data_dir();
  ::setenv("LAT_DATA_DIR", "/nonexistent/unimod", 1);
  EXPECT_EQ(data_dir(), std::filesystem::path("/nonexistent/unimod"));
  const TableEntry* o23 = find_table_entry("O23");
  ASSERT_NE(o23, nullptr);
  EXPECT_FALSE(table_entry_available(*o23));
  const TableRow row = verify_table_row(*o23);
  EXPECT_EQ(row.status, RowStatus::Skipped);
  ::unsetenv("LAT_DATA_DIR");
  EXPECT_EQ(data_dir(), saved);
}
