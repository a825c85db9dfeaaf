#include "quandles/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "quandles/errors.hpp"
#include "quandles/perm.hpp"

namespace quandles {

namespace {

struct Line {
  int number = 0;  // 1-based position in the file
  std::string text;
};

// Strips comments and blank lines up front so the parser below only ever
// sees significant lines.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    ++number;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && raw[first] != '#') {
      std::size_t last = raw.find_last_not_of(" \t\r");
      out.push_back({number, std::string(raw.substr(first, last - first + 1))});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

// Splits a significant line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(std::move(tok));
  return out;
}

int parse_positive_int(const std::string& tok, const char* what, int line) {
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(std::string("expected a positive integer for ") + what +
                           ", got \"" + tok + "\"",
                       line);
  long v = 0;
  try {
    v = std::stol(tok);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " out of range: \"" + tok + "\"",
                     line);
  }
  if (v <= 0)
    throw ParseError(std::string(what) + " must be positive, got " + tok,
                     line);
  return static_cast<int>(v);
}

FiniteGroup parse_generator_form(const std::vector<Line>& lines,
                                 std::size_t header, int degree,
                                 std::string name, std::uint64_t bound) {
  std::vector<Permutation> gens;
  for (std::size_t i = header + 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    auto toks = tokens_of(ln.text);
    if (toks.empty()) continue;
    if (toks[0] != "gen")
      throw ParseError("expected \"gen <cycles>\", got \"" + ln.text + "\"",
                       ln.number);
    std::string rest = ln.text.substr(ln.text.find("gen") + 3);
    try {
      gens.push_back(Permutation::parse_cycles(rest, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln.number);
    }
  }
  if (gens.empty())
    throw ParseError("generator form needs at least one \"gen\" line",
                     lines[header].number);
  return FiniteGroup::from_permutation_generators(std::move(gens), degree,
                                                  bound, std::move(name));
}

FiniteGroup parse_table_form(const std::vector<Line>& lines,
                             std::size_t header, int order, std::string name,
                             std::uint64_t bound) {
  std::vector<std::vector<int>> table;
  table.reserve(static_cast<std::size_t>(order));
  std::size_t i = header + 1;
  for (int r = 0; r < order; ++r, ++i) {
    if (i >= lines.size())
      throw ParseError("table ends after " + std::to_string(r) + " of " +
                           std::to_string(order) + " rows",
                       lines.back().number);
    const Line& ln = lines[i];
    auto toks = tokens_of(ln.text);
    if (static_cast<int>(toks.size()) != order)
      throw ParseError("table row has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(order),
                       ln.number);
    std::vector<int> row;
    row.reserve(toks.size());
    for (const auto& tok : toks) {
      int v = parse_positive_int(tok, "table entry", ln.number);
      if (v > order)
        throw ParseError("table entry " + std::to_string(v) +
                             " exceeds the order " + std::to_string(order),
                         ln.number);
      row.push_back(v);
    }
    table.push_back(std::move(row));
  }
  if (i < lines.size())
    throw ParseError("unexpected content after the multiplication table",
                     lines[i].number);
  try {
    return FiniteGroup::from_cayley_table(table, bound, std::move(name));
  } catch (const Error& e) {
    // Structural defects are reported against the header; the table is
    // validated as a whole, not row by row.
    throw ParseError(e.what(), lines[header].number);
  }
}

}  // namespace

FiniteGroup parse_group_text(std::string_view text, std::string name,
                             std::uint64_t bound) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("no content outside comments", 1);
  const Line& header = lines.front();
  auto toks = tokens_of(header.text);
  if (toks.size() != 2)
    throw ParseError(
        "header must be \"degree N\" or \"table N\", got \"" + header.text +
            "\"",
        header.number);
  int n = parse_positive_int(toks[1], toks[0].c_str(), header.number);
  if (toks[0] == "degree")
    return parse_generator_form(lines, 0, n, std::move(name), bound);
  if (toks[0] == "table")
    return parse_table_form(lines, 0, n, std::move(name), bound);
  throw ParseError("unknown header \"" + toks[0] +
                       "\"; expected \"degree\" or \"table\"",
                   header.number);
}

FiniteGroup load_group_file(const std::filesystem::path& path,
                            std::uint64_t bound) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file: " + path.string(), -1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path.stem().string(), bound);
}

}  // namespace quandles
