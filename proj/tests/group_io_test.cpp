#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "quandles/errors.hpp"
#include "quandles/group.hpp"
#include "quandles/group_io.hpp"

using quandles::FiniteGroup;
using quandles::load_group_file;
using quandles::ParseError;
using quandles::parse_group_text;

namespace {

int line_of(const std::string& text) {
  try {
    parse_group_text(text, "t");
  } catch (const ParseError& e) {
    return e.line();
  }
  return -999;
}

}  // namespace

TEST_CASE("generator form parses with comments and blank lines") {
  std::string text =
      "# sample group\n"
      "degree 4\n"
      "\n"
      "gen (1 2)\n"
      "  # indented comment\n"
      "gen (1 2 3 4)\n";
  FiniteGroup g = parse_group_text(text, "sample");
  CHECK(g.name() == "sample");
  CHECK(g.order() == 24);
  CHECK(g.generators().size() == 2);
  CHECK(!g.catalog_tag().has_value());
}

TEST_CASE("table form parses and validates as a group") {
  std::string text =
      "table 4\n"
      "1 2 3 4\n"
      "2 1 4 3\n"
      "3 4 1 2\n"
      "4 3 2 1\n";
  FiniteGroup g = parse_group_text(text, "klein");
  CHECK(g.order() == 4);
  CHECK(g.center().size() == 4);
  for (const auto& e : g.elements())
    if (!(e == g.identity())) CHECK(g.element_order(e) == 2);
}

TEST_CASE("header errors carry the physical line number") {
  CHECK(line_of("") == 1);
  CHECK(line_of("# only comments\n\n# more\n") == 1);
  CHECK(line_of("degree\n") == 1);
  CHECK(line_of("degree 4 extra\n") == 1);
  CHECK(line_of("# leading comment\n\nlattice 4\ngen (1 2)\n") == 3);
  CHECK(line_of("degree zero\n") == 1);
  CHECK(line_of("degree 0\n") == 1);
  CHECK(line_of("degree -3\n") == 1);
}

TEST_CASE("generator body errors carry the physical line number") {
  std::string bad_cycle =
      "# group\n"
      "degree 4\n"
      "\n"
      "gen (1 2)\n"
      "# comment\n"
      "gen (1 2\n";
  CHECK(line_of(bad_cycle) == 6);
  CHECK_THROWS_AS(parse_group_text(bad_cycle, "t"), ParseError);

  CHECK(line_of("degree 4\ngen (1 5)\n") == 2);
  CHECK(line_of("degree 4\ngenerate (1 2)\n") == 2);
  // No generators at all: reported against the header.
  CHECK(line_of("degree 4\n") == 1);
}

TEST_CASE("table body errors carry the physical line number") {
  CHECK(line_of("table 3\n1 2 3\n2 3 1\n") == 3);            // truncated
  CHECK(line_of("table 2\n1 2\n2 1 1\n") == 3);              // ragged row
  CHECK(line_of("table 2\n1 2\n2 9\n") == 3);                // entry too big
  CHECK(line_of("table 2\n1 2\n2 x\n") == 3);                // non-numeric
  CHECK(line_of("table 2\n1 2\n2 1\n1 2\n") == 4);           // trailing rows
  // Structurally invalid tables are reported against the header.
  CHECK(line_of("table 2\n2 1\n1 2\n") == 1);                // no identity
  CHECK(line_of("table 2\n1 2\n2 2\n") == 1);                // repeated entry
}

TEST_CASE("enumeration bound passes through to the parsed group") {
  std::string text = "degree 8\ngen (1 2)\ngen (1 2 3 4 5 6 7 8)\n";
  FiniteGroup small = parse_group_text(text, "s8", 100);
  CHECK_THROWS_AS(small.elements(), quandles::BoundExceeded);
  FiniteGroup wide = parse_group_text(text, "s8", 50000);
  CHECK(wide.order() == 40320);
}

TEST_CASE("group files are named after their stem") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "quandles-io-test";
  fs::create_directories(dir);
  fs::path file = dir / "rot12.grp";
  {
    std::ofstream out(file);
    out << "degree 12\ngen (1 2 3 4 5 6 7 8 9 10 11 12)\n";
  }
  FiniteGroup g = load_group_file(file);
  CHECK(g.name() == "rot12");
  CHECK(g.order() == 12);
  fs::remove_all(dir);

  CHECK_THROWS_AS(load_group_file(dir / "missing.grp"), ParseError);
}
