#include "quandles/group.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "quandles/errors.hpp"

namespace quandles {

GroupElement::GroupElement(GroupElement left, GroupElement right)
    : v_(Pair{std::move(left), std::move(right)}) {}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
  if (auto c = v_.index() <=> o.v_.index(); c != 0) return c;
  if (is_permutation()) return permutation() <=> o.permutation();
  if (is_table_index()) return table_index() <=> o.table_index();
  const Pair& a = components();
  const Pair& b = o.components();
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t GroupElement::hash() const {
  if (is_permutation()) return permutation().hash();
  if (is_table_index())
    return std::hash<std::uint64_t>{}(table_index()) * 0x9e3779b97f4a7c15ull;
  std::size_t h = 0x517cc1b727220a95ull;
  for (const GroupElement& c : components())
    h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string to_string(const GroupElement& e) {
  if (e.is_permutation()) return e.permutation().format();
  if (e.is_table_index()) return "#" + std::to_string(e.table_index() + 1);
  std::string out = "(";
  const auto& cs = e.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(cs[i]);
  }
  return out + ")";
}

namespace {

struct CayleyTable {
  int n = 0;
  std::vector<std::uint32_t> mul;  // row-major, n*n
  std::vector<std::uint32_t> inv;

  std::uint32_t at(std::uint32_t a, std::uint32_t b) const {
    return mul[static_cast<std::size_t>(a) * n + b];
  }
};

struct PermPresentation {
  int degree = 1;
};
struct TablePresentation {
  std::shared_ptr<const CayleyTable> table;
};
struct ProductPresentation {
  FiniteGroup left;
  FiniteGroup right;
};

using Presentation =
    std::variant<PermPresentation, TablePresentation, ProductPresentation>;

GroupElement mul_in(const Presentation& pres, const GroupElement& a,
                    const GroupElement& b) {
  if (std::holds_alternative<PermPresentation>(pres))
    return GroupElement(a.permutation() * b.permutation());
  if (const auto* tp = std::get_if<TablePresentation>(&pres))
    return GroupElement(tp->table->at(a.table_index(), b.table_index()));
  const auto& pp = std::get<ProductPresentation>(pres);
  return GroupElement(pp.left.multiply(a.components()[0], b.components()[0]),
                      pp.right.multiply(a.components()[1], b.components()[1]));
}

GroupElement inv_in(const Presentation& pres, const GroupElement& a) {
  if (std::holds_alternative<PermPresentation>(pres))
    return GroupElement(a.permutation().inverse());
  if (const auto* tp = std::get_if<TablePresentation>(&pres))
    return GroupElement(tp->table->inv[a.table_index()]);
  const auto& pp = std::get<ProductPresentation>(pres);
  return GroupElement(pp.left.inverse(a.components()[0]),
                      pp.right.inverse(a.components()[1]));
}

GroupElement id_in(const Presentation& pres) {
  if (const auto* pp = std::get_if<PermPresentation>(&pres))
    return GroupElement(Permutation::identity(pp->degree));
  if (std::holds_alternative<TablePresentation>(pres))
    return GroupElement(std::uint32_t{0});
  const auto& pr = std::get<ProductPresentation>(pres);
  return GroupElement(pr.left.identity(), pr.right.identity());
}

/// Closure of the generators under right multiplication, starting from the
/// identity. Generators already reachable from previously kept ones are
/// skipped, which keeps the sweep near |G| times the minimal generator count.
std::vector<GroupElement> closure_elements(const Presentation& pres,
                                           const std::vector<GroupElement>& gens,
                                           std::uint64_t bound) {
  std::unordered_set<GroupElement> seen;
  std::vector<GroupElement> out;
  GroupElement id = id_in(pres);
  seen.insert(id);
  out.push_back(id);
  std::vector<GroupElement> kept;
  for (const GroupElement& g : gens) {
    if (seen.contains(g)) continue;
    kept.push_back(g);
    if (seen.size() + 1 > bound) throw BoundExceeded(bound, "subgroup closure");
    seen.insert(g);
    out.push_back(g);
    std::deque<GroupElement> todo(out.begin(), out.end());
    while (!todo.empty()) {
      GroupElement x = std::move(todo.front());
      todo.pop_front();
      for (const GroupElement& k : kept) {
        GroupElement y = mul_in(pres, x, k);
        if (seen.contains(y)) continue;
        if (seen.size() + 1 > bound)
          throw BoundExceeded(bound, "subgroup closure");
        seen.insert(y);
        out.push_back(y);
        todo.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation full_cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n + 1;
  return Permutation::from_images(std::move(im));
}

}  // namespace

struct FiniteGroup::Impl {
  Presentation pres;
  std::vector<GroupElement> generators;
  std::uint64_t bound = kDefaultEnumerationBound;
  std::string name;
  std::optional<CatalogTag> tag;

  mutable std::mutex mu;
  mutable std::shared_ptr<const std::vector<GroupElement>> elements;
  mutable std::shared_ptr<const std::unordered_set<GroupElement>> element_set;
};

FiniteGroup::FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

namespace {

std::shared_ptr<FiniteGroup::Impl> new_impl(Presentation pres,
                                            std::vector<GroupElement> gens,
                                            std::uint64_t bound,
                                            std::string name,
                                            std::optional<CatalogTag> tag) {
  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->pres = std::move(pres);
  impl->generators = std::move(gens);
  impl->bound = bound;
  impl->name = std::move(name);
  impl->tag = tag;
  return impl;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutation_generators(
    std::vector<Permutation> generators, int degree, std::uint64_t bound,
    std::string name) {
  if (degree < 1) throw ParameterOutOfRange("degree must be positive");
  std::vector<GroupElement> gens;
  gens.reserve(generators.size());
  for (Permutation& p : generators) {
    if (p.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(p.degree()) +
                           " in a group of degree " + std::to_string(degree));
    gens.emplace_back(std::move(p));
  }
  if (name.empty()) name = "perm-group(" + std::to_string(degree) + ")";
  return FiniteGroup(new_impl(PermPresentation{degree}, std::move(gens), bound,
                              std::move(name), std::nullopt));
}

FiniteGroup FiniteGroup::from_cayley_table(
    const std::vector<std::vector<int>>& table, std::uint64_t bound,
    std::string name) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw ParameterOutOfRange("table must be nonempty");
  auto ct = std::make_shared<CayleyTable>();
  ct->n = n;
  ct->mul.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ParseError("table row " + std::to_string(i + 1) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 1 || v > n)
        throw ParseError("table entry " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
      ct->mul[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint32_t>(v - 1);
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      std::uint32_t r = ct->at(i, j), c = ct->at(j, i);
      if (row[r])
        throw ParseError("row " + std::to_string(i + 1) + " repeats element " +
                         std::to_string(r + 1));
      if (col[c])
        throw ParseError("column " + std::to_string(i + 1) +
                         " repeats element " + std::to_string(c + 1));
      row[r] = col[c] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (ct->at(0, j) != static_cast<std::uint32_t>(j) ||
        ct->at(j, 0) != static_cast<std::uint32_t>(j))
      throw ParseError("element 1 is not an identity");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (ct->at(ct->at(i, j), k) != ct->at(i, ct->at(j, k)))
          throw ParseError("table is not associative at (" +
                           std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + ", " + std::to_string(k + 1) +
                           ")");
  ct->inv.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ct->at(i, j) == 0) ct->inv[i] = static_cast<std::uint32_t>(j);

  std::vector<GroupElement> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(static_cast<std::uint32_t>(i));
  if (name.empty()) name = "table(" + std::to_string(n) + ")";
  return FiniteGroup(new_impl(TablePresentation{std::move(ct)}, std::move(gens),
                              bound, std::move(name), std::nullopt));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  std::vector<GroupElement> gens;
  for (const GroupElement& g : a.generators()) gens.emplace_back(g, b.identity());
  for (const GroupElement& h : b.generators()) gens.emplace_back(a.identity(), h);
  std::uint64_t bound = std::max(a.enumeration_bound(), b.enumeration_bound());
  return FiniteGroup(new_impl(ProductPresentation{a, b}, std::move(gens), bound,
                              a.name() + " x " + b.name(), std::nullopt));
}

FiniteGroup FiniteGroup::generated_subgroup(
    std::vector<GroupElement> generators) const {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::erase(generators, identity());
  return FiniteGroup(new_impl(impl_->pres, std::move(generators), impl_->bound,
                              "<subgroup of " + impl_->name + ">",
                              std::nullopt));
}

FiniteGroup FiniteGroup::with_bound(std::uint64_t bound) const {
  return FiniteGroup(
      new_impl(impl_->pres, impl_->generators, bound, impl_->name, impl_->tag));
}

const std::string& FiniteGroup::name() const { return impl_->name; }
const std::optional<CatalogTag>& FiniteGroup::catalog_tag() const {
  return impl_->tag;
}
std::optional<std::pair<FiniteGroup, FiniteGroup>> FiniteGroup::product_factors()
    const {
  if (const auto* p = std::get_if<ProductPresentation>(&impl_->pres))
    return std::make_pair(p->left, p->right);
  return std::nullopt;
}
std::uint64_t FiniteGroup::enumeration_bound() const { return impl_->bound; }
const std::vector<GroupElement>& FiniteGroup::generators() const {
  return impl_->generators;
}

GroupElement FiniteGroup::identity() const { return id_in(impl_->pres); }

GroupElement FiniteGroup::multiply(const GroupElement& a,
                                   const GroupElement& b) const {
  return mul_in(impl_->pres, a, b);
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
  return inv_in(impl_->pres, a);
}

GroupElement FiniteGroup::conjugate(const GroupElement& g,
                                    const GroupElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

GroupElement FiniteGroup::power(const GroupElement& a, std::int64_t k) const {
  if (k < 0) return power(inverse(a), -k);
  GroupElement acc = identity();
  GroupElement base = a;
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

std::int64_t FiniteGroup::element_order(const GroupElement& a) const {
  if (a.is_permutation()) return a.permutation().order();
  if (const auto* pp = std::get_if<ProductPresentation>(&impl_->pres)) {
    std::int64_t l = pp->left.element_order(a.components()[0]);
    std::int64_t r = pp->right.element_order(a.components()[1]);
    return std::lcm(l, r);
  }
  GroupElement id = identity();
  GroupElement x = a;
  std::int64_t ord = 1;
  while (!(x == id)) {
    x = multiply(x, a);
    ++ord;
  }
  return ord;
}

std::vector<GroupElement> FiniteGroup::cyclic_subgroup(
    const GroupElement& a) const {
  std::vector<GroupElement> out;
  GroupElement id = identity();
  GroupElement x = id;
  do {
    out.push_back(x);
    x = multiply(x, a);
  } while (!(x == id));
  return out;
}

bool FiniteGroup::commutes(const GroupElement& a, const GroupElement& b) const {
  return multiply(a, b) == multiply(b, a);
}

bool FiniteGroup::is_central(const GroupElement& a) const {
  for (const GroupElement& g : impl_->generators)
    if (!commutes(a, g)) return false;
  return true;
}

const std::vector<GroupElement>& FiniteGroup::elements() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->elements) {
    impl_->elements = std::make_shared<const std::vector<GroupElement>>(
        closure_elements(impl_->pres, impl_->generators, impl_->bound));
  }
  return *impl_->elements;
}

std::uint64_t FiniteGroup::order() const { return elements().size(); }

bool FiniteGroup::contains(const GroupElement& a) const {
  elements();
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->element_set) {
    impl_->element_set =
        std::make_shared<const std::unordered_set<GroupElement>>(
            impl_->elements->begin(), impl_->elements->end());
  }
  return impl_->element_set->contains(a);
}

std::vector<GroupElement> FiniteGroup::center() const {
  std::vector<GroupElement> out;
  for (const GroupElement& x : elements())
    if (is_central(x)) out.push_back(x);
  return out;
}

ConjClass FiniteGroup::conjugacy_class(const GroupElement& e) const {
  std::unordered_map<GroupElement, GroupElement> conj_of;  // member -> conjugator
  std::deque<GroupElement> todo;
  conj_of.emplace(e, identity());
  todo.push_back(e);
  while (!todo.empty()) {
    GroupElement x = std::move(todo.front());
    todo.pop_front();
    const GroupElement cx = conj_of.at(x);
    for (const GroupElement& g : impl_->generators) {
      GroupElement y = conjugate(g, x);
      if (conj_of.contains(y)) continue;
      if (conj_of.size() + 1 > impl_->bound)
        throw BoundExceeded(impl_->bound, "conjugacy class");
      conj_of.emplace(y, multiply(g, cx));
      todo.push_back(y);
    }
  }
  std::vector<GroupElement> members;
  members.reserve(conj_of.size());
  for (const auto& [m, c] : conj_of) members.push_back(m);
  std::sort(members.begin(), members.end());
  const GroupElement& rep = members.front();
  GroupElement rebase = inverse(conj_of.at(rep));
  std::vector<GroupElement> conjugators;
  conjugators.reserve(members.size());
  for (const GroupElement& m : members)
    conjugators.push_back(multiply(conj_of.at(m), rebase));
  return ConjClass{*this, rep, std::move(members), std::move(conjugators)};
}

std::vector<ConjClass> FiniteGroup::conjugacy_classes() const {
  std::vector<ConjClass> out;
  std::unordered_set<GroupElement> assigned;
  for (const GroupElement& x : elements()) {
    if (assigned.contains(x)) continue;
    ConjClass cls = conjugacy_class(x);
    for (const GroupElement& m : cls.members) assigned.insert(m);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

bool ConjClass::contains(const GroupElement& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<std::vector<GroupElement>> split_class_in_subgroup(
    const ConjClass& cls, const FiniteGroup& h) {
  std::vector<std::vector<GroupElement>> blocks;
  std::unordered_set<GroupElement> assigned;
  for (const GroupElement& start : cls.members) {
    if (assigned.contains(start)) continue;
    std::vector<GroupElement> block;
    std::deque<GroupElement> todo;
    assigned.insert(start);
    block.push_back(start);
    todo.push_back(start);
    while (!todo.empty()) {
      GroupElement x = std::move(todo.front());
      todo.pop_front();
      for (const GroupElement& g : h.generators()) {
        GroupElement y = h.conjugate(g, x);
        if (assigned.contains(y)) continue;
        assigned.insert(y);
        block.push_back(y);
        todo.push_back(y);
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  // Members are scanned in sorted order, so blocks come out ordered by their
  // first member.
  return blocks;
}

FiniteGroup symmetric_group(int n, std::uint64_t bound) {
  if (n < 1) throw ParameterOutOfRange("symmetric(n) requires n >= 1");
  std::vector<GroupElement> gens;
  if (n >= 2) gens.emplace_back(Permutation::parse_cycles("(1 2)", n));
  if (n >= 3) gens.emplace_back(full_cycle(n));
  return FiniteGroup(new_impl(PermPresentation{std::max(n, 1)}, std::move(gens),
                              bound, "symmetric(" + std::to_string(n) + ")",
                              CatalogTag{CatalogFamily::symmetric, n}));
}

FiniteGroup alternating_group(int n, std::uint64_t bound) {
  if (n < 1) throw ParameterOutOfRange("alternating(n) requires n >= 1");
  std::vector<GroupElement> gens;
  for (int k = 3; k <= n; ++k)
    gens.emplace_back(
        Permutation::parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  return FiniteGroup(new_impl(PermPresentation{std::max(n, 1)}, std::move(gens),
                              bound, "alternating(" + std::to_string(n) + ")",
                              CatalogTag{CatalogFamily::alternating, n}));
}

FiniteGroup dihedral_group(int order, std::uint64_t bound) {
  if (order < 6 || order % 2 != 0)
    throw ParameterOutOfRange("dihedral(m) requires even m >= 6");
  const int n = order / 2;
  std::vector<int> refl(n);
  refl[0] = 1;
  for (int i = 2; i <= n; ++i) refl[i - 1] = n + 2 - i;
  std::vector<GroupElement> gens{GroupElement(full_cycle(n)),
                                 GroupElement(Permutation::from_images(refl))};
  return FiniteGroup(new_impl(PermPresentation{n}, std::move(gens), bound,
                              "dihedral(" + std::to_string(order) + ")",
                              CatalogTag{CatalogFamily::dihedral, order}));
}

FiniteGroup cyclic_group(int n, std::uint64_t bound) {
  if (n < 1) throw ParameterOutOfRange("cyclic(n) requires n >= 1");
  std::vector<GroupElement> gens;
  if (n >= 2) gens.emplace_back(full_cycle(n));
  return FiniteGroup(new_impl(PermPresentation{std::max(n, 1)}, std::move(gens),
                              bound, "cyclic(" + std::to_string(n) + ")",
                              CatalogTag{CatalogFamily::cyclic, n}));
}

}  // namespace quandles
