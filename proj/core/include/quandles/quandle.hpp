#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "quandles/group.hpp"
#include "quandles/perm.hpp"

namespace quandles {

/// The permutation of quandle points induced by one translating element:
/// action(i) = index of source * C[i] * source^-1. Always fixes the index
/// of `source` itself.
struct LeftTranslation {
  GroupElement source;
  Permutation action;
};

/// A conjugation-closed subset C of a finite group under a * b = a b a^-1.
/// Points are the members of C in canonical order; all permutations returned
/// by the translation machinery act on their 1-based indices.
///
/// Immutable after construction and cheap to copy; the generated subgroup
/// and the translation table are memoized behind the shared handle.
class ConjugationQuandle {
public:
  /// Validates that `ground` is nonempty, duplicate-free, and closed under
  /// conjugation by every member and every member's inverse. Inverse closure
  /// is checked explicitly even though finite order implies it, so the
  /// validator stays independent of any enumeration.
  static ConjugationQuandle build(const FiniteGroup& g,
                                  std::vector<GroupElement> ground);

  /// Quandle on the conjugacy class of `e`. Runs the same closure validation
  /// as `build`; a failure there is a defect, not a data error.
  static ConjugationQuandle of_class(const FiniteGroup& g,
                                     const GroupElement& e);

  /// Same, reusing an already computed class. The class (with conjugators)
  /// stays available via source_class().
  static ConjugationQuandle of_class(ConjClass cls);

  /// Componentwise quandle on C1 x C2 over the direct product group.
  /// Closure holds by construction, so validation is skipped; the size
  /// |C1|*|C2| is capped by the product group's enumeration bound.
  static ConjugationQuandle product(const ConjugationQuandle& a,
                                    const ConjugationQuandle& b);

  int size() const;
  const std::vector<GroupElement>& ground() const;
  const FiniteGroup& ambient() const;

  /// H = <C>, memoized. Enumerating its elements may hit the bound.
  const FiniteGroup& generated() const;

  /// The class this quandle was built from, when made via of_class.
  const std::optional<ConjClass>& source_class() const;

  /// 1-based point index of `e`; throws NotAMember.
  int index_of(const GroupElement& e) const;

  /// a * b = a b a^-1. Both arguments must be points.
  GroupElement star(const GroupElement& a, const GroupElement& b) const;

  LeftTranslation left_translation(const GroupElement& c) const;

  /// Actions of all translations, entry i belonging to ground()[i]. Memoized.
  const std::vector<Permutation>& translation_table() const;

  /// Closure of {start} under all translations and their inverses.
  std::vector<GroupElement> lmlt_orbit(const GroupElement& start) const;

  /// Transitivity via orbit growth from the first point. No enumeration of
  /// the generated subgroup; this is the default connectedness route.
  bool is_connected_direct() const;

  /// Transitivity via the subgroup criterion: C must be a single conjugacy
  /// class of H = <C>. Enumerates H in full and sweeps {h C[1] h^-1}, so it
  /// shares no machinery with the orbit route; throws BoundExceeded when H
  /// is too large. Used for cross-checks.
  bool is_connected_criterion() const;

  /// Cycle structure of every translation, entry i for ground()[i].
  std::vector<CycleStructure> translation_cycle_structures() const;

  /// True iff every translation's cycle structure has a regular cycle.
  bool has_hayashi_property() const;

  /// Order of the permutation group generated by all translation actions
  /// inside Sym(|C|). Throws BoundExceeded when the closure outgrows the
  /// ambient group's bound.
  std::uint64_t lmlt_order() const;

private:
  struct Impl;
  explicit ConjugationQuandle(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

}  // namespace quandles
