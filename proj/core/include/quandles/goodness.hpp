#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandles/group.hpp"
#include "quandles/perm.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

enum class Verdict { good, not_good, undecided };

/// How a goodness verdict was reached. The first two shortcuts prove the
/// verdict without producing witnesses; the last three carry one witness per
/// class member.
enum class Method {
  brute_force,            // exhaustive witness search per member
  transported,            // one search, the rest conjugated and re-validated
  sym_construction,       // constructive witness for Sym/Alt elements
  prime_power_shortcut,   // representative has prime-power (or 1) order
  small_class_shortcut,   // commuting class of size <= 2, translations trivial
};

const char* to_string(Verdict v);
const char* to_string(Method m);

/// Result of deciding whether a conjugacy class is good: every member c has
/// a witness z in the class such that the only powers of c commuting with z
/// are central in H = <C>.
///
/// `witnesses` holds one (c, z) pair per member when the deciding route
/// computes them; shortcut verdicts leave it empty. Both the ambient group
/// and H are recorded: commutation is checked between elements (the same in
/// any ambient), centrality always against H.
struct GoodnessReport {
  GroupElement class_id;  // canonical representative
  Verdict verdict;
  Method method;
  std::vector<std::pair<GroupElement, GroupElement>> witnesses;
  std::optional<GroupElement> failing_c;  // set iff verdict == not_good
  std::string note;                       // bound message when undecided
  FiniteGroup ambient;
  FiniteGroup generated;
};

/// The four per-class conditions that are equivalent by theory, evaluated
/// independently, plus the per-translation agreement of the two
/// regular-cycle routes. Returned only when everything agrees; a
/// disagreement throws instead.
struct EquivalenceAudit {
  bool some_translation_regular;
  bool exists_witness_pair;
  bool every_member_has_witness;
  bool all_translations_regular;
  bool stabilizer_route_agrees;
  bool agreement;
};

/// True iff n is 1 or a prime power.
bool prime_power_or_one(std::int64_t n);

/// True iff ord(c) is 1 or a prime power; then every left translation by c
/// in any conjugation quandle containing c has a regular cycle, so searches
/// can be skipped.
bool prime_power_shortcut(const FiniteGroup& g, const GroupElement& c);

/// True iff no positive power of pi below its order fixes z. Implemented as
/// the literal walk of z under pi, which self-terminates within one cycle
/// length, so it never costs more than degree steps.
bool stabilizer_trivial_at(const Permutation& pi, int z);

/// Evaluates "pi has a regular cycle" by the cycle-structure route and by
/// the trivial-stabilizer route, returns the common value. The two routes
/// share no code; a disagreement throws EquivalenceViolation and means a
/// defect, not a mathematical possibility.
bool regular_cycle_crosscheck(const Permutation& pi);

/// True iff for every k in [0, ord(c)): c^k commuting with z implies c^k is
/// central in h. Both c and z must lie in h for the verdict to mean
/// anything; commutation itself is element arithmetic and does not depend
/// on the ambient group.
bool centralizer_criterion(const GroupElement& c, const GroupElement& z,
                           const FiniteGroup& h);

/// First member of the class, in canonical order, passing the centralizer
/// criterion against e; absent when none does. The oracle behind both
/// good_class and the constructive route's audits.
std::optional<GroupElement> witness_bruteforce(const GroupElement& e,
                                               const ConjClass& cls,
                                               const FiniteGroup& h);

/// Decides goodness by exhaustive witness search for every member.
/// BoundExceeded during the search degrades to verdict undecided.
GoodnessReport good_class(const ConjClass& cls);

/// Same verdict as good_class: searches a witness for the representative
/// only, transports it to every other member by the recorded conjugators,
/// and re-validates each transported witness. A transported witness failing
/// re-validation throws EquivalenceViolation.
GoodnessReport good_class_fast(const ConjClass& cls);

/// Constructive witness for an element of a symmetric or alternating group
/// on at least 5 points: z = sigma e sigma^-1 with sigma even, such that no
/// nontrivial power of e commutes with z. Both facts are re-checked before
/// returning; a failure throws ConstructionPostconditionFailed and signals
/// a defect.
struct SymWitness {
  Permutation z;
  Permutation sigma;
};
SymWitness witness_sym(const Permutation& e);

/// Goodness reports for every class of the dihedral group of order 2n,
/// n >= 3. Reflection classes go through the prime-power shortcut, rotation
/// classes through the small-class shortcut; every shortcut verdict is
/// cross-checked against good_class, whose witnesses are merged into the
/// returned reports.
std::vector<GoodnessReport> dihedral_goodness(int n);

/// Evaluates the four equivalent goodness conditions of the class quandle
/// of e independently and asserts agreement; disagreement throws
/// EquivalenceViolation.
EquivalenceAudit equivalence_audit(const FiniteGroup& g,
                                   const GroupElement& e);

/// For a class generating its ambient group, decides goodness by the
/// exhaustive route. Throws PreconditionFailed when <C> is a proper
/// subgroup.
bool generating_class_check(const FiniteGroup& g, const ConjClass& cls);

/// Production front end: prime-power shortcut first, then the constructive
/// route on symmetric/alternating catalog groups with n >= 5, then
/// transport. With audit set, the exhaustive route runs as well, verdicts
/// must agree, and its witnesses fill any report the shortcuts left bare.
GoodnessReport goodness_report(const ConjClass& cls, bool audit = false);

}  // namespace quandles
