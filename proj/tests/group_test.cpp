#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "quandles/errors.hpp"
#include "quandles/group.hpp"
#include "quandles/perm.hpp"

using quandles::alternating_group;
using quandles::CatalogFamily;
using quandles::ConjClass;
using quandles::cyclic_group;
using quandles::dihedral_group;
using quandles::FiniteGroup;
using quandles::GroupElement;
using quandles::Permutation;
using quandles::split_class_in_subgroup;
using quandles::symmetric_group;

namespace {

GroupElement perm_of(const FiniteGroup&, std::string_view text, int degree) {
  return GroupElement(Permutation::parse_cycles(text, degree));
}

// Full conjugation sweep; the class routine under test avoids enumerating
// the group, so this is an independent route.
std::vector<GroupElement> class_by_sweep(const FiniteGroup& g,
                                         const GroupElement& e) {
  std::set<GroupElement> orbit;
  for (const auto& x : g.elements()) orbit.insert(g.conjugate(x, e));
  return {orbit.begin(), orbit.end()};
}

std::int64_t order_by_multiplication(const FiniteGroup& g,
                                     const GroupElement& e) {
  GroupElement p = e;
  std::int64_t n = 1;
  while (!(p == g.identity())) {
    p = g.multiply(p, e);
    ++n;
  }
  return n;
}

std::vector<std::uint64_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::uint64_t> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Klein four-group as a Cayley table.
const std::vector<std::vector<int>> kKleinTable = {
    {1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};

}  // namespace

TEST_CASE("catalog groups have the expected orders and tags") {
  struct Row {
    FiniteGroup g;
    std::uint64_t order;
    CatalogFamily family;
    int parameter;
  };
  std::vector<Row> rows;
  rows.push_back({symmetric_group(4), 24, CatalogFamily::symmetric, 4});
  rows.push_back({alternating_group(5), 60, CatalogFamily::alternating, 5});
  rows.push_back({dihedral_group(12), 12, CatalogFamily::dihedral, 12});
  rows.push_back({cyclic_group(9), 9, CatalogFamily::cyclic, 9});
  for (const auto& row : rows) {
    CHECK(row.g.order() == row.order);
    REQUIRE(row.g.catalog_tag().has_value());
    CHECK(row.g.catalog_tag()->family == row.family);
    CHECK(row.g.catalog_tag()->parameter == row.parameter);
  }
  CHECK(symmetric_group(1).order() == 1);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(2).order() == 1);
}

TEST_CASE("catalog constructors reject bad parameters") {
  CHECK_THROWS_AS(symmetric_group(0), quandles::ParameterOutOfRange);
  CHECK_THROWS_AS(cyclic_group(-1), quandles::ParameterOutOfRange);
  CHECK_THROWS_AS(dihedral_group(7), quandles::ParameterOutOfRange);
  CHECK_THROWS_AS(dihedral_group(4), quandles::ParameterOutOfRange);
}

TEST_CASE("dihedral parameter is the group order") {
  for (int order = 6; order <= 24; order += 2) {
    FiniteGroup d = dihedral_group(order);
    CHECK(d.order() == static_cast<std::uint64_t>(order));
    // Rotation subgroup of index 2: exactly order/2 elements that are powers
    // of the basic rotation.
    GroupElement o = d.generators().at(0);
    CHECK(d.element_order(o) == order / 2);
  }
}

TEST_CASE("group operations satisfy the axioms on mixed samples") {
  std::vector<FiniteGroup> gs = {symmetric_group(4), dihedral_group(10),
                                 cyclic_group(6),
                                 FiniteGroup::from_cayley_table(kKleinTable)};
  for (const auto& g : gs) {
    const auto& els = g.elements();
    for (const auto& a : els) {
      CHECK(g.multiply(a, g.identity()) == a);
      CHECK(g.multiply(g.identity(), a) == a);
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      CHECK(g.multiply(g.inverse(a), a) == g.identity());
      CHECK(g.contains(a));
    }
    // Associativity on a sample triple grid.
    for (std::size_t i = 0; i < els.size(); i += 3)
      for (std::size_t j = 1; j < els.size(); j += 4)
        for (std::size_t k = 2; k < els.size(); k += 5)
          CHECK(g.multiply(g.multiply(els[i], els[j]), els[k]) ==
                g.multiply(els[i], g.multiply(els[j], els[k])));
  }
}

TEST_CASE("power and element_order match repeated multiplication") {
  FiniteGroup g = symmetric_group(5);
  GroupElement a = perm_of(g, "(1 2 3)(4 5)", 5);
  CHECK(g.element_order(a) == 6);
  CHECK(g.element_order(a) == order_by_multiplication(g, a));
  CHECK(g.power(a, 0) == g.identity());
  CHECK(g.power(a, 6) == g.identity());
  CHECK(g.power(a, -1) == g.inverse(a));
  CHECK(g.power(a, 7) == a);

  FiniteGroup c = cyclic_group(12);
  for (const auto& e : c.elements()) {
    CHECK(c.element_order(e) == order_by_multiplication(c, e));
    auto cyc = c.cyclic_subgroup(e);
    CHECK(cyc.size() == static_cast<std::size_t>(c.element_order(e)));
    std::set<GroupElement> seen(cyc.begin(), cyc.end());
    CHECK(seen.size() == cyc.size());
    for (const auto& p : cyc) CHECK(c.contains(p));
  }
}

TEST_CASE("centers are correct for known groups") {
  CHECK(symmetric_group(3).center().size() == 1);
  CHECK(symmetric_group(4).center().size() == 1);
  CHECK(alternating_group(4).center().size() == 1);
  CHECK(dihedral_group(8).center().size() == 2);
  CHECK(dihedral_group(10).center().size() == 1);
  CHECK(cyclic_group(7).center().size() == 7);
  FiniteGroup g = symmetric_group(4);
  for (const auto& z : g.center()) CHECK(g.is_central(z));
  CHECK(g.is_central(g.identity()));
  CHECK(!g.is_central(perm_of(g, "(1 2)", 4)));
}

TEST_CASE("conjugacy classes match the full-sweep oracle") {
  std::vector<FiniteGroup> gs = {symmetric_group(4), alternating_group(4),
                                 dihedral_group(12), cyclic_group(8),
                                 FiniteGroup::from_cayley_table(kKleinTable)};
  for (const auto& g : gs) {
    std::uint64_t covered = 0;
    for (const auto& cls : g.conjugacy_classes()) {
      CHECK(cls.members == class_by_sweep(g, cls.representative));
      CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
      CHECK(cls.representative == cls.members.front());
      covered += cls.size();
    }
    CHECK(covered == g.order());
  }
}

TEST_CASE("frozen class sizes for S4 and A5") {
  CHECK(class_sizes(symmetric_group(4)) ==
        std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(alternating_group(5)) ==
        std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(class_sizes(dihedral_group(16)) ==
        std::vector<std::uint64_t>{1, 1, 2, 2, 2, 4, 4});
}

TEST_CASE("class conjugators transport the representative to each member") {
  std::vector<FiniteGroup> gs = {symmetric_group(5), dihedral_group(14)};
  for (const auto& g : gs) {
    for (const auto& cls : g.conjugacy_classes()) {
      REQUIRE(cls.conjugators.size() == cls.members.size());
      for (std::size_t i = 0; i < cls.members.size(); ++i)
        CHECK(g.conjugate(cls.conjugators[i], cls.representative) ==
              cls.members[i]);
      CHECK(cls.contains(cls.representative));
      if (cls.size() > 1) CHECK(!cls.contains(g.identity()));
    }
  }
}

TEST_CASE("conjugacy_class works without enumerating the ambient group") {
  // S8 has 40320 elements, over the 500 cap, but the class of a transposition
  // only has 28 members and the orbit walk never needs the full group.
  FiniteGroup g = symmetric_group(8, 500);
  ConjClass cls = g.conjugacy_class(perm_of(g, "(1 2)", 8));
  CHECK(cls.size() == 28);
  CHECK_THROWS_AS(g.elements(), quandles::BoundExceeded);
}

TEST_CASE("generated subgroups enumerate the closure") {
  FiniteGroup s4 = symmetric_group(4);
  FiniteGroup h = s4.generated_subgroup(
      {perm_of(s4, "(1 2)", 4), perm_of(s4, "(1 2 3)", 4)});
  CHECK(h.order() == 6);
  CHECK(h.contains(perm_of(s4, "(1 3)", 4)));
  CHECK(!h.contains(perm_of(s4, "(1 4)", 4)));

  FiniteGroup a4 = s4.generated_subgroup(
      {perm_of(s4, "(1 2 3)", 4), perm_of(s4, "(2 3 4)", 4)});
  CHECK(a4.order() == 12);

  FiniteGroup trivial = s4.generated_subgroup({});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements().front() == s4.identity());
}

TEST_CASE("splitting a class under a smaller subgroup") {
  FiniteGroup s4 = symmetric_group(4);
  ConjClass threes = s4.conjugacy_class(perm_of(s4, "(1 2 3)", 4));
  REQUIRE(threes.size() == 8);
  FiniteGroup h = s4.generated_subgroup(threes.members);
  CHECK(h.order() == 12);
  auto blocks = split_class_in_subgroup(threes, h);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].size() == 4);
  CHECK(blocks[1].size() == 4);
  std::set<GroupElement> all;
  for (const auto& b : blocks) {
    CHECK(std::is_sorted(b.begin(), b.end()));
    all.insert(b.begin(), b.end());
  }
  CHECK(all.size() == 8);
  CHECK(blocks[0].front() < blocks[1].front());

  // Under the whole group the class does not split.
  auto whole = split_class_in_subgroup(threes, s4);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 8);
}

TEST_CASE("direct products multiply componentwise") {
  FiniteGroup p = FiniteGroup::direct_product(symmetric_group(3),
                                              cyclic_group(4));
  CHECK(p.order() == 24);
  REQUIRE(p.product_factors().has_value());
  CHECK(p.product_factors()->first.order() == 6);
  CHECK(p.product_factors()->second.order() == 4);
  CHECK(!symmetric_group(3).product_factors().has_value());

  GroupElement a(GroupElement(Permutation::parse_cycles("(1 2)", 3)),
                 p.product_factors()->second.generators().at(0));
  GroupElement sq = p.multiply(a, a);
  REQUIRE(sq.is_pair());
  CHECK(sq.components()[0] ==
        GroupElement(Permutation::identity(3)));
  CHECK(p.element_order(a) == 4);

  // Class sizes multiply across factors.
  auto sizes = class_sizes(p);
  std::vector<std::uint64_t> want;
  for (auto s : class_sizes(symmetric_group(3)))
    for (auto t : class_sizes(cyclic_group(4))) want.push_back(s * t);
  std::sort(want.begin(), want.end());
  CHECK(sizes == want);
}

TEST_CASE("cayley table groups validate their input") {
  FiniteGroup k = FiniteGroup::from_cayley_table(kKleinTable);
  CHECK(k.order() == 4);
  for (const auto& e : k.elements())
    if (!(e == k.identity())) CHECK(k.element_order(e) == 2);
  CHECK(k.center().size() == 4);
  CHECK(quandles::to_string(k.identity()) == "#1");
  CHECK(quandles::to_string(GroupElement(std::uint32_t{2})) == "#3");

  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 2}, {2, 2}}),
                  quandles::ParseError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{2, 1}, {1, 2}}),
                  quandles::ParseError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{1, 2}, {2, 3}}),
                  quandles::ParseError);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({}),
                  quandles::ParameterOutOfRange);
}

TEST_CASE("element display forms") {
  CHECK(quandles::to_string(GroupElement(
            Permutation::parse_cycles("(1 2 3)", 5))) == "(1 2 3)");
  GroupElement pair(GroupElement(Permutation::parse_cycles("(1 2)", 3)),
                    GroupElement(std::uint32_t{0}));
  CHECK(quandles::to_string(pair) == "((1 2), #1)");
}

TEST_CASE("enumeration bound is honored and adjustable") {
  FiniteGroup g = symmetric_group(7, 1000);
  CHECK(g.enumeration_bound() == 1000);
  CHECK_THROWS_AS(g.elements(), quandles::BoundExceeded);
  try {
    g.elements();
    FAIL("expected BoundExceeded");
  } catch (const quandles::BoundExceeded& e) {
    CHECK(e.bound() == 1000);
  }
  FiniteGroup wide = g.with_bound(10000);
  CHECK(wide.order() == 5040);
  // The original keeps its cap.
  CHECK_THROWS_AS(g.elements(), quandles::BoundExceeded);
}

TEST_CASE("elements are sorted and duplicate-free") {
  for (const auto& g : {symmetric_group(4), dihedral_group(16),
                        FiniteGroup::direct_product(cyclic_group(3),
                                                    cyclic_group(5))}) {
    const auto& els = g.elements();
    CHECK(std::is_sorted(els.begin(), els.end()));
    CHECK(std::adjacent_find(els.begin(), els.end()) == els.end());
  }
}
