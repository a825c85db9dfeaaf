#include "sources.hpp"

#include <algorithm>
#include <unordered_set>

#include "quandles/errors.hpp"

namespace quandlescope {

using quandles::FiniteGroup;

namespace {

struct ParsedPart {
  std::string family;
  int parameter;
};

ParsedPart parse_part(const std::string& part) {
  auto colon = part.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == part.size())
    throw quandles::UnknownFamily("expected \"family:param\", got \"" + part +
                                  "\"");
  std::string family = part.substr(0, colon);
  std::string num = part.substr(colon + 1);
  for (char ch : num)
    if (ch < '0' || ch > '9')
      throw quandles::ParameterOutOfRange("parameter in \"" + part +
                                          "\" is not a number");
  long v = 0;
  try {
    v = std::stol(num);
  } catch (const std::exception&) {
    throw quandles::ParameterOutOfRange("parameter in \"" + part +
                                        "\" is out of range");
  }
  return {family, static_cast<int>(v)};
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<std::string> split_product_spec(const std::string& spec) {
  // Factors separated by a lone "x" token.
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : spec + " ") {
    if (ch == ' ' || ch == '\t') {
      if (!cur.empty()) toks.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  std::vector<std::string> parts;
  bool expect_factor = true;
  for (const auto& tok : toks) {
    if (expect_factor) {
      parts.push_back(tok);
      expect_factor = false;
    } else if (tok == "x") {
      expect_factor = true;
    } else {
      throw quandles::UnknownFamily("expected \"x\" between factors in \"" +
                                    spec + "\"");
    }
  }
  if (expect_factor || parts.empty())
    throw quandles::UnknownFamily("malformed catalog spec \"" + spec + "\"");
  return parts;
}

FiniteGroup make_single(const std::string& part, std::uint64_t bound) {
  ParsedPart p = parse_part(part);
  if (p.family == "symmetric") return quandles::symmetric_group(p.parameter, bound);
  if (p.family == "alternating")
    return quandles::alternating_group(p.parameter, bound);
  if (p.family == "dihedral") return quandles::dihedral_group(p.parameter, bound);
  if (p.family == "cyclic") return quandles::cyclic_group(p.parameter, bound);
  throw quandles::UnknownFamily("unknown catalog family \"" + p.family + "\"");
}

}  // namespace

std::uint64_t catalog_order(const std::string& part) {
  ParsedPart p = parse_part(part);
  int n = p.parameter;
  if (p.family == "symmetric") {
    if (n < 1) throw quandles::ParameterOutOfRange("symmetric needs n >= 1");
    return factorial(n);
  }
  if (p.family == "alternating") {
    if (n < 1) throw quandles::ParameterOutOfRange("alternating needs n >= 1");
    return n <= 2 ? 1 : factorial(n) / 2;
  }
  if (p.family == "dihedral") {
    if (n < 6 || n % 2 != 0)
      throw quandles::ParameterOutOfRange(
          "dihedral takes the group order: even, >= 6");
    return static_cast<std::uint64_t>(n);
  }
  if (p.family == "cyclic") {
    if (n < 1) throw quandles::ParameterOutOfRange("cyclic needs n >= 1");
    return static_cast<std::uint64_t>(n);
  }
  throw quandles::UnknownFamily("unknown catalog family \"" + p.family + "\"");
}

FiniteGroup make_catalog_group(const std::string& spec, std::uint64_t bound) {
  auto parts = split_product_spec(spec);
  FiniteGroup g = make_single(parts[0], bound);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = FiniteGroup::direct_product(g, make_single(parts[i], bound));
  return g;
}

FiniteGroup realize(const CatalogEntry& entry, std::uint64_t bound) {
  FiniteGroup g = make_single(entry.parts.at(0), bound);
  for (std::size_t i = 1; i < entry.parts.size(); ++i)
    g = FiniteGroup::direct_product(g, make_single(entry.parts[i], bound));
  return g;
}

std::vector<CatalogEntry> expand_catalog(const std::vector<std::string>& specs,
                                         std::uint64_t max_order) {
  std::vector<std::string> singles;
  bool want_products = false;

  auto push_single = [&](const std::string& s) { singles.push_back(s); };

  std::vector<std::string> queue(specs);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::string spec = queue[qi];
    if (spec == "standard") {
      queue.push_back("cyclic");
      queue.push_back("dihedral");
      queue.push_back("symmetric");
      queue.push_back("alternating");
      queue.push_back("products");
    } else if (spec == "products") {
      want_products = true;
    } else if (spec == "cyclic") {
      for (std::uint64_t n = 2; n <= max_order; ++n)
        push_single("cyclic:" + std::to_string(n));
    } else if (spec == "dihedral") {
      for (std::uint64_t n = 6; n <= max_order; n += 2)
        push_single("dihedral:" + std::to_string(n));
    } else if (spec == "symmetric") {
      for (int n = 3; factorial(n) <= max_order; ++n)
        push_single("symmetric:" + std::to_string(n));
    } else if (spec == "alternating") {
      for (int n = 4; factorial(n) / 2 <= max_order; ++n)
        push_single("alternating:" + std::to_string(n));
    } else {
      for (const auto& part : split_product_spec(spec)) parse_part(part);
      push_single(spec);
    }
  }

  std::vector<CatalogEntry> out;
  std::unordered_set<std::string> seen;
  auto emit = [&](CatalogEntry e) {
    if (seen.insert(e.spec).second) out.push_back(std::move(e));
  };

  for (const auto& s : singles) {
    auto parts = split_product_spec(s);
    std::string display = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) display += " x " + parts[i];
    emit(CatalogEntry{display, parts});
  }

  if (want_products) {
    // Products pair only the one-factor entries, in listing order.
    std::vector<std::string> base;
    for (const auto& e : out)
      if (e.parts.size() == 1) base.push_back(e.parts[0]);
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::uint64_t oi = catalog_order(base[i]);
      for (std::size_t j = i; j < base.size(); ++j) {
        std::uint64_t oj = catalog_order(base[j]);
        if (oi != 0 && oi * oj <= max_order)
          emit(CatalogEntry{base[i] + " x " + base[j], {base[i], base[j]}});
      }
    }
  }
  return out;
}

}  // namespace quandlescope
