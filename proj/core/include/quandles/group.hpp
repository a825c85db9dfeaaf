#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quandles/perm.hpp"

namespace quandles {

inline constexpr std::uint64_t kDefaultEnumerationBound = 20000;

class FiniteGroup;

/// Element of a finite group: a permutation, a 0-based index into a Cayley
/// table, or a pair of components of a direct product. Comparison is by kind
/// first, then by value (image sequence, index, componentwise), which gives
/// the canonical ordering used everywhere for determinism.
class GroupElement {
public:
  using Pair = std::vector<GroupElement>;

  GroupElement(Permutation p) : v_(std::move(p)) {}
  explicit GroupElement(std::uint32_t table_index) : v_(table_index) {}
  GroupElement(GroupElement left, GroupElement right);

  bool is_permutation() const { return std::holds_alternative<Permutation>(v_); }
  bool is_table_index() const { return std::holds_alternative<std::uint32_t>(v_); }
  bool is_pair() const { return std::holds_alternative<Pair>(v_); }

  const Permutation& permutation() const { return std::get<Permutation>(v_); }
  std::uint32_t table_index() const { return std::get<std::uint32_t>(v_); }
  const Pair& components() const { return std::get<Pair>(v_); }

  bool operator==(const GroupElement& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const GroupElement& o) const;

  std::size_t hash() const;

private:
  std::variant<Permutation, std::uint32_t, Pair> v_;
};

/// Canonical display form: cycle notation for permutations, "#k" (1-based)
/// for table elements, "(a, b)" for product elements.
std::string to_string(const GroupElement& e);

enum class CatalogFamily { symmetric, alternating, dihedral, cyclic };

struct CatalogTag {
  CatalogFamily family;
  int parameter;  // n for symmetric/alternating/cyclic, group order for dihedral
};

struct ConjClass;

/// Finite group given by generators and a multiplication oracle. Cheap to
/// copy (shared state); element enumeration is lazy, memoized, capped by the
/// enumeration bound, and safe under concurrent readers.
class FiniteGroup {
public:
  static FiniteGroup from_permutation_generators(
      std::vector<Permutation> generators, int degree,
      std::uint64_t bound = kDefaultEnumerationBound, std::string name = "");

  /// `table[i][j]` is the 1-based index of element i*j; element 1 must be the
  /// identity. The table is validated (Latin square, identity, associativity).
  static FiniteGroup from_cayley_table(
      const std::vector<std::vector<int>>& table,
      std::uint64_t bound = kDefaultEnumerationBound, std::string name = "");

  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  /// Subgroup generated by `generators` inside the same presentation. An
  /// empty list yields the trivial subgroup.
  FiniteGroup generated_subgroup(std::vector<GroupElement> generators) const;

  /// Same presentation and generators, different enumeration cap, fresh caches.
  FiniteGroup with_bound(std::uint64_t bound) const;

  const std::string& name() const;
  const std::optional<CatalogTag>& catalog_tag() const;

  /// The two factor groups when this is a direct product, empty otherwise.
  std::optional<std::pair<FiniteGroup, FiniteGroup>> product_factors() const;
  std::uint64_t enumeration_bound() const;
  const std::vector<GroupElement>& generators() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& x) const;
  GroupElement power(const GroupElement& a, std::int64_t k) const;
  std::int64_t element_order(const GroupElement& a) const;
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& a) const;

  bool commutes(const GroupElement& a, const GroupElement& b) const;

  /// True iff `a` commutes with every generator; no enumeration involved.
  bool is_central(const GroupElement& a) const;

  /// All elements, sorted canonically. Memoized; throws BoundExceeded if the
  /// closure grows past the bound.
  const std::vector<GroupElement>& elements() const;
  std::uint64_t order() const;
  bool contains(const GroupElement& a) const;
  std::vector<GroupElement> center() const;

  /// Orbit of `e` under conjugation, with conjugators recorded relative to
  /// the canonical (minimal) representative. Does not enumerate the group.
  ConjClass conjugacy_class(const GroupElement& e) const;

  /// All classes, ordered by canonical representative.
  std::vector<ConjClass> conjugacy_classes() const;

  struct Impl;  // internal; defined out of line

private:
  explicit FiniteGroup(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;

  friend FiniteGroup symmetric_group(int, std::uint64_t);
  friend FiniteGroup alternating_group(int, std::uint64_t);
  friend FiniteGroup dihedral_group(int, std::uint64_t);
  friend FiniteGroup cyclic_group(int, std::uint64_t);
};

/// Conjugacy class with its orbit sorted canonically. `conjugators[i]`
/// satisfies members[i] = conjugators[i] * representative * conjugators[i]^-1.
struct ConjClass {
  FiniteGroup ambient;
  GroupElement representative;
  std::vector<GroupElement> members;
  std::vector<GroupElement> conjugators;

  std::size_t size() const { return members.size(); }
  bool contains(const GroupElement& x) const;
};

/// Partition of the class into orbits under conjugation by H's generators.
/// Blocks are sorted internally and ordered by their first member.
std::vector<std::vector<GroupElement>> split_class_in_subgroup(
    const ConjClass& cls, const FiniteGroup& h);

FiniteGroup symmetric_group(int n, std::uint64_t bound = kDefaultEnumerationBound);
FiniteGroup alternating_group(int n, std::uint64_t bound = kDefaultEnumerationBound);
/// `order` is the group order 2n; requires order even and >= 6. The model
/// acts on n points: o = (1 2 ... n), s the reflection fixing point 1.
FiniteGroup dihedral_group(int order, std::uint64_t bound = kDefaultEnumerationBound);
FiniteGroup cyclic_group(int n, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace quandles

template <>
struct std::hash<quandles::GroupElement> {
  std::size_t operator()(const quandles::GroupElement& e) const {
    return e.hash();
  }
};
