#include "quandles/quandle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "quandles/errors.hpp"

namespace quandles {

struct ConjugationQuandle::Impl {
  FiniteGroup ambient;
  std::vector<GroupElement> ground;  // sorted canonically
  std::unordered_map<GroupElement, int> index;  // 1-based
  std::optional<ConjClass> source_class;

  mutable std::mutex mu;
  mutable std::shared_ptr<const FiniteGroup> generated;
  mutable std::shared_ptr<const std::vector<Permutation>> translations;

  Impl(FiniteGroup g, std::vector<GroupElement> c)
      : ambient(std::move(g)), ground(std::move(c)) {
    index.reserve(ground.size());
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
      index.emplace(ground[static_cast<std::size_t>(i)], i + 1);
  }
};

namespace {

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Closure check against members and their inverses. Quadratic in |C| with
// O(1) membership tests; the first violating pair becomes the error witness.
void validate_closed(const FiniteGroup& g,
                     const std::vector<GroupElement>& ground) {
  std::unordered_set<GroupElement> in(ground.begin(), ground.end());
  for (const auto& a : ground) {
    GroupElement ai = g.inverse(a);
    for (const auto& b : ground) {
      if (!in.count(g.conjugate(a, b)) || !in.count(g.conjugate(ai, b)))
        throw NotClosed(to_string(a), to_string(b));
    }
  }
}

}  // namespace

ConjugationQuandle::ConjugationQuandle(std::shared_ptr<Impl> impl)
    : impl_(std::move(impl)) {}

ConjugationQuandle ConjugationQuandle::build(const FiniteGroup& g,
                                             std::vector<GroupElement> ground) {
  ground = sorted_unique(std::move(ground));
  if (ground.empty()) throw EmptyGround();
  validate_closed(g, ground);
  return ConjugationQuandle(std::make_shared<Impl>(g, std::move(ground)));
}

ConjugationQuandle ConjugationQuandle::of_class(const FiniteGroup& g,
                                                const GroupElement& e) {
  return of_class(g.conjugacy_class(e));
}

ConjugationQuandle ConjugationQuandle::of_class(ConjClass cls) {
  ConjugationQuandle q = build(cls.ambient, cls.members);
  q.impl_->source_class = std::move(cls);
  return q;
}

ConjugationQuandle ConjugationQuandle::product(const ConjugationQuandle& a,
                                               const ConjugationQuandle& b) {
  FiniteGroup g = FiniteGroup::direct_product(a.ambient(), b.ambient());
  std::uint64_t n = static_cast<std::uint64_t>(a.size()) *
                    static_cast<std::uint64_t>(b.size());
  if (n > g.enumeration_bound())
    throw BoundExceeded(g.enumeration_bound(),
                        "product ground set of size " + std::to_string(a.size()) +
                            " * " + std::to_string(b.size()));
  std::vector<GroupElement> ground;
  ground.reserve(n);
  for (const auto& x : a.ground())
    for (const auto& y : b.ground()) ground.push_back(GroupElement(x, y));
  // Componentwise closure of closed factors; sorting alone keeps the
  // canonical point order.
  std::sort(ground.begin(), ground.end());
  return ConjugationQuandle(std::make_shared<Impl>(g, std::move(ground)));
}

int ConjugationQuandle::size() const {
  return static_cast<int>(impl_->ground.size());
}

const std::vector<GroupElement>& ConjugationQuandle::ground() const {
  return impl_->ground;
}

const FiniteGroup& ConjugationQuandle::ambient() const {
  return impl_->ambient;
}

const FiniteGroup& ConjugationQuandle::generated() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->generated)
    impl_->generated = std::make_shared<const FiniteGroup>(
        impl_->ambient.generated_subgroup(impl_->ground));
  return *impl_->generated;
}

const std::optional<ConjClass>& ConjugationQuandle::source_class() const {
  return impl_->source_class;
}

int ConjugationQuandle::index_of(const GroupElement& e) const {
  auto it = impl_->index.find(e);
  if (it == impl_->index.end())
    throw NotAMember(to_string(e) + " is not a point of the quandle");
  return it->second;
}

GroupElement ConjugationQuandle::star(const GroupElement& a,
                                      const GroupElement& b) const {
  index_of(a);
  index_of(b);
  return impl_->ambient.conjugate(a, b);
}

LeftTranslation ConjugationQuandle::left_translation(
    const GroupElement& c) const {
  index_of(c);
  const auto& g = impl_->ambient;
  std::vector<int> images(impl_->ground.size());
  for (std::size_t i = 0; i < impl_->ground.size(); ++i)
    images[i] = index_of(g.conjugate(c, impl_->ground[i]));
  return LeftTranslation{c, Permutation::from_images(std::move(images))};
}

const std::vector<Permutation>& ConjugationQuandle::translation_table() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->translations) {
    auto table = std::make_shared<std::vector<Permutation>>();
    table->reserve(impl_->ground.size());
    for (const auto& c : impl_->ground)
      table->push_back(left_translation(c).action);
    impl_->translations = std::move(table);
  }
  return *impl_->translations;
}

std::vector<GroupElement> ConjugationQuandle::lmlt_orbit(
    const GroupElement& start) const {
  const auto& table = translation_table();
  std::vector<Permutation> steps(table);
  for (const auto& t : table) steps.push_back(t.inverse());
  int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> frontier;
  int s = index_of(start);
  seen[static_cast<std::size_t>(s)] = 1;
  frontier.push_back(s);
  while (!frontier.empty()) {
    int p = frontier.front();
    frontier.pop_front();
    for (const auto& t : steps) {
      int q = t.apply(p);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        frontier.push_back(q);
      }
    }
  }
  std::vector<GroupElement> orbit;
  for (int i = 1; i <= n; ++i)
    if (seen[static_cast<std::size_t>(i)])
      orbit.push_back(impl_->ground[static_cast<std::size_t>(i - 1)]);
  return orbit;
}

bool ConjugationQuandle::is_connected_direct() const {
  return static_cast<int>(lmlt_orbit(impl_->ground.front()).size()) == size();
}

bool ConjugationQuandle::is_connected_criterion() const {
  const FiniteGroup& h = generated();
  const auto& all = h.elements();
  std::unordered_set<GroupElement> cls;
  const GroupElement& rep = impl_->ground.front();
  for (const auto& x : all) cls.insert(impl_->ambient.conjugate(x, rep));
  if (cls.size() != impl_->ground.size()) return false;
  for (const auto& c : impl_->ground)
    if (!cls.count(c)) return false;
  return true;
}

std::vector<CycleStructure> ConjugationQuandle::translation_cycle_structures()
    const {
  const auto& table = translation_table();
  std::vector<CycleStructure> out;
  out.reserve(table.size());
  for (const auto& t : table) out.push_back(t.cycle_structure());
  return out;
}

bool ConjugationQuandle::has_hayashi_property() const {
  for (const auto& t : translation_table())
    if (!t.cycle_structure().has_regular_cycle()) return false;
  return true;
}

std::uint64_t ConjugationQuandle::lmlt_order() const {
  FiniteGroup lmlt = FiniteGroup::from_permutation_generators(
      translation_table(), size(), impl_->ambient.enumeration_bound(),
      "lmlt");
  return lmlt.order();
}

}  // namespace quandles
