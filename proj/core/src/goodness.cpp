#include "quandles/goodness.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "quandles/errors.hpp"

namespace quandles {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::good: return "good";
    case Verdict::not_good: return "not_good";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::brute_force: return "brute_force";
    case Method::transported: return "transported";
    case Method::sym_construction: return "sym_construction";
    case Method::prime_power_shortcut: return "prime_power_shortcut";
    case Method::small_class_shortcut: return "small_class_shortcut";
  }
  return "?";
}

bool prime_power_or_one(std::int64_t n) {
  if (n < 1) return false;
  if (n == 1) return true;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) p = n;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

bool prime_power_shortcut(const FiniteGroup& g, const GroupElement& c) {
  return prime_power_or_one(g.element_order(c));
}

bool stabilizer_trivial_at(const Permutation& pi, int z) {
  if (z < 1 || z > pi.degree())
    throw PointOutOfRange("point " + std::to_string(z) +
                          " out of range for degree " +
                          std::to_string(pi.degree()));
  // Walks z forward one application at a time. The walk returns to z after
  // exactly one cycle length, so it stops within degree steps even when the
  // order is astronomically larger.
  std::int64_t d = pi.order();
  int y = z;
  for (std::int64_t k = 1; k < d; ++k) {
    y = pi.apply(y);
    if (y == z) return false;
  }
  return true;
}

bool regular_cycle_crosscheck(const Permutation& pi) {
  bool by_structure = pi.cycle_structure().has_regular_cycle();
  bool by_stabilizer = false;
  for (int z = 1; z <= pi.degree() && !by_stabilizer; ++z)
    by_stabilizer = stabilizer_trivial_at(pi, z);
  if (pi.degree() == 0) by_stabilizer = by_structure;  // empty domain corner
  if (by_structure != by_stabilizer)
    throw EquivalenceViolation(
        "regular-cycle routes disagree on " + pi.format() + ": structure " +
        (by_structure ? "true" : "false") + ", stabilizer " +
        (by_stabilizer ? "true" : "false"));
  return by_structure;
}

bool centralizer_criterion(const GroupElement& c, const GroupElement& z,
                           const FiniteGroup& h) {
  std::int64_t d = h.element_order(c);
  GroupElement p = h.identity();
  for (std::int64_t k = 0; k < d; ++k) {
    if (h.commutes(p, z) && !h.is_central(p)) return false;
    p = h.multiply(p, c);
  }
  return true;
}

namespace {

// Powers e^k, 0 < k < ord(e), that are not central in h. A witness z is
// exactly an element commuting with none of these, so classifying the
// powers once makes every z test a handful of multiplications.
std::vector<GroupElement> noncentral_powers(const FiniteGroup& h,
                                            const GroupElement& e) {
  std::vector<GroupElement> out;
  std::int64_t d = h.element_order(e);
  GroupElement p = e;
  for (std::int64_t k = 1; k < d; ++k) {
    if (!h.is_central(p)) out.push_back(p);
    p = h.multiply(p, e);
  }
  return out;
}

FiniteGroup generated_from(const ConjClass& cls) {
  return cls.ambient.generated_subgroup(cls.members);
}

}  // namespace

std::optional<GroupElement> witness_bruteforce(const GroupElement& e,
                                               const ConjClass& cls,
                                               const FiniteGroup& h) {
  std::vector<GroupElement> blocking = noncentral_powers(h, e);
  for (const auto& z : cls.members) {
    bool ok = true;
    for (const auto& p : blocking) {
      if (h.commutes(p, z)) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  return std::nullopt;
}

GoodnessReport good_class(const ConjClass& cls) {
  FiniteGroup h = generated_from(cls);
  GoodnessReport r{cls.representative, Verdict::undecided, Method::brute_force,
                   {},  std::nullopt,  "",
                   cls.ambient,        h};
  try {
    for (const auto& c : cls.members) {
      auto z = witness_bruteforce(c, cls, h);
      if (!z) {
        r.verdict = Verdict::not_good;
        r.failing_c = c;
        r.witnesses.clear();
        return r;
      }
      r.witnesses.emplace_back(c, *z);
    }
    r.verdict = Verdict::good;
  } catch (const BoundExceeded& b) {
    r.verdict = Verdict::undecided;
    r.witnesses.clear();
    r.note = b.what();
  }
  return r;
}

GoodnessReport good_class_fast(const ConjClass& cls) {
  FiniteGroup h = generated_from(cls);
  GoodnessReport r{cls.representative, Verdict::undecided, Method::transported,
                   {},  std::nullopt,  "",
                   cls.ambient,        h};
  try {
    auto z0 = witness_bruteforce(cls.representative, cls, h);
    if (!z0) {
      r.verdict = Verdict::not_good;
      r.failing_c = cls.representative;
      return r;
    }
    const FiniteGroup& g = cls.ambient;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      GroupElement z = g.conjugate(cls.conjugators[i], *z0);
      if (!cls.contains(z))
        throw EquivalenceViolation("transported witness " + to_string(z) +
                                   " left the class of " +
                                   to_string(cls.representative));
      if (!centralizer_criterion(cls.members[i], z, h))
        throw EquivalenceViolation(
            "transported witness " + to_string(z) + " fails for " +
            to_string(cls.members[i]) + " in the class of " +
            to_string(cls.representative));
      r.witnesses.emplace_back(cls.members[i], std::move(z));
    }
    r.verdict = Verdict::good;
  } catch (const BoundExceeded& b) {
    r.verdict = Verdict::undecided;
    r.witnesses.clear();
    r.note = b.what();
  }
  return r;
}

namespace {

// Helpers building explicit permutations on n points.

Permutation disjoint_transpositions(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (auto [a, b] : pairs) {
    if (a == b || used[static_cast<std::size_t>(a)] ||
        used[static_cast<std::size_t>(b)])
      throw ConstructionPostconditionFailed(
          "transposition factors are not disjoint");
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    im[static_cast<std::size_t>(a - 1)] = b;
    im[static_cast<std::size_t>(b - 1)] = a;
  }
  return Permutation::from_images(std::move(im));
}

Permutation three_cycle(int n, int a, int b, int c) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  im[static_cast<std::size_t>(a - 1)] = b;
  im[static_cast<std::size_t>(b - 1)] = c;
  im[static_cast<std::size_t>(c - 1)] = a;
  return Permutation::from_images(std::move(im));
}

// Relabeling for the witness construction: point i must land in a cycle of
// length lambda_i for i = 1..t (lengths ascending). Per length the chosen
// cycle is the one containing the smallest point, entered at that point;
// every other point gets the next free label in first-visit order.
Permutation witness_relabeling(const Permutation& e) {
  int n = e.degree();
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 1; p <= n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    std::vector<int> cyc;
    int q = p;
    do {
      cyc.push_back(q);
      seen[static_cast<std::size_t>(q)] = 1;
      q = e.apply(q);
    } while (q != p);
    cycles.push_back(std::move(cyc));
  }
  std::vector<std::pair<int, std::size_t>> chosen;  // (length, cycle index)
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    int len = static_cast<int>(cycles[i].size());
    bool have = false;
    for (const auto& c : chosen) have = have || c.first == len;
    if (!have) chosen.emplace_back(len, i);
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (const auto& c : chosen)
    label[static_cast<std::size_t>(cycles[c.second].front())] = next++;
  for (const auto& cyc : cycles)
    for (int p : cyc)
      if (!label[static_cast<std::size_t>(p)])
        label[static_cast<std::size_t>(p)] = next++;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p)
    images[static_cast<std::size_t>(p - 1)] =
        label[static_cast<std::size_t>(p)];
  return Permutation::from_images(std::move(images));
}

int smallest_point_excluding(int n, const std::vector<int>& used) {
  std::vector<char> mask(static_cast<std::size_t>(n) + 1, 0);
  for (int v : used) mask[static_cast<std::size_t>(v)] = 1;
  for (int p = 1; p <= n; ++p)
    if (!mask[static_cast<std::size_t>(p)]) return p;
  throw ConstructionPostconditionFailed("ran out of points to pick from");
}

// The conjugator in relabeled coordinates, split by the shape of the
// structure: a single distinct length gets the direct small constructions,
// several lengths get the transposition product whose parity is then fixed
// on two spare points.
Permutation witness_conjugator(const Permutation& f,
                               const CycleStructure& cs) {
  int n = f.degree();
  const auto& ent = cs.entries();
  int t = static_cast<int>(ent.size());
  int lambda1 = ent.front().first;
  int lambdat = ent.back().first;

  if (t == 1) {
    if (lambda1 == 1) return Permutation::identity(n);
    if (lambda1 == 2) {
      int u1 = f.apply(1);
      int u2 = smallest_point_excluding(n, {1, u1});
      int u3 = f.apply(u2);
      int u4 = smallest_point_excluding(n, {1, u1, u2, u3});
      return disjoint_transpositions(n, {{u1, u2}, {u3, u4}});
    }
    if (lambda1 == 3) {
      int u1 = f.apply(1);
      int u2 = f.apply(u1);
      int u3 = smallest_point_excluding(n, {1, u1, u2});
      int u4 = f.apply(u3);
      return three_cycle(n, u2, u3, u4);
    }
    int u1 = f.apply(1);
    int u2 = f.apply(u1);
    return three_cycle(n, 1, u1, u2);
  }

  // Points of the shortest cycle (through 1) and the longest (through t).
  std::vector<int> u(static_cast<std::size_t>(lambda1));
  u[0] = 1;
  for (int i = 1; i < lambda1; ++i)
    u[static_cast<std::size_t>(i)] = f.apply(u[static_cast<std::size_t>(i - 1)]);
  std::vector<int> x(static_cast<std::size_t>(lambdat));
  x[0] = t;
  for (int j = 1; j < lambdat; ++j)
    x[static_cast<std::size_t>(j)] = f.apply(x[static_cast<std::size_t>(j - 1)]);

  // Pairs (x_{t-1+i}, u_i) for odd i, then (x_j, t-j); building both sets
  // through one disjointness-checking constructor doubles as the runtime
  // assertion that their supports do not meet.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= lambda1 - 1; i += 2) {
    int xi = t - 1 + i;
    if (xi >= lambdat)
      throw ConstructionPostconditionFailed(
          "not enough points in the longest cycle");
    pairs.emplace_back(x[static_cast<std::size_t>(xi)],
                       u[static_cast<std::size_t>(i)]);
  }
  for (int j = 1; j <= t - 1; ++j)
    pairs.emplace_back(x[static_cast<std::size_t>(j)], t - j);
  Permutation sig0 = disjoint_transpositions(n, pairs);
  if (sig0.parity() == Parity::even) return sig0;
  if (lambdat >= 3)
    return disjoint_transpositions(n, {{x[1], x[2]}}) * sig0;
  // Only the shape (1^a, 2^b) with t = 2 lands here; two spare points
  // outside {1..t} and the shortest cycle fix the parity.
  std::vector<int> used;
  for (int i = 1; i <= t; ++i) used.push_back(i);
  for (int i = 1; i < lambda1; ++i) used.push_back(u[static_cast<std::size_t>(i)]);
  int y1 = smallest_point_excluding(n, used);
  used.push_back(y1);
  int y2 = smallest_point_excluding(n, used);
  return disjoint_transpositions(n, {{y1, y2}}) * sig0;
}

}  // namespace

SymWitness witness_sym(const Permutation& e) {
  int n = e.degree();
  if (n < 5)
    throw DegreeTooSmall("witness construction needs degree >= 5, got " +
                         std::to_string(n));
  Permutation tau = witness_relabeling(e);
  Permutation f = conjugate(tau, e);
  Permutation sigma_rel = witness_conjugator(f, e.cycle_structure());
  Permutation tau_inv = tau.inverse();
  Permutation sigma = conjugate(tau_inv, sigma_rel);
  Permutation z = conjugate(sigma, e);

  if (sigma.parity() != Parity::even)
    throw ConstructionPostconditionFailed("conjugator for " + e.format() +
                                          " came out odd: " + sigma.format());
  std::int64_t d = e.order();
  Permutation p = e;
  for (std::int64_t k = 1; k < d; ++k) {
    if (p * z == z * p)
      throw ConstructionPostconditionFailed(
          "witness " + z.format() + " commutes with power " +
          std::to_string(k) + " of " + e.format());
    p = p * e;
  }
  return SymWitness{std::move(z), std::move(sigma)};
}

std::vector<GoodnessReport> dihedral_goodness(int n) {
  if (n < 3)
    throw ParameterOutOfRange("dihedral goodness expects n >= 3, got " +
                              std::to_string(n));
  FiniteGroup g = dihedral_group(2 * n);
  auto rot = g.cyclic_subgroup(g.generators().front());
  std::unordered_set<GroupElement> rotations(rot.begin(), rot.end());

  std::vector<GoodnessReport> out;
  for (const auto& cls : g.conjugacy_classes()) {
    Method method;
    if (rotations.count(cls.representative)) {
      // Rotations commute, so the class has at most two members and every
      // translation restricted to it is the identity.
      if (cls.size() > 2)
        throw EquivalenceViolation("rotation class of " +
                                   to_string(cls.representative) +
                                   " has more than two members");
      if (cls.size() == 2 && !g.commutes(cls.members[0], cls.members[1]))
        throw EquivalenceViolation("rotation class members fail to commute");
      method = Method::small_class_shortcut;
    } else {
      if (g.element_order(cls.representative) != 2)
        throw EquivalenceViolation("reflection " +
                                   to_string(cls.representative) +
                                   " does not square to the identity");
      method = Method::prime_power_shortcut;
    }
    GoodnessReport brute = good_class(cls);
    if (brute.verdict != Verdict::good)
      throw EquivalenceViolation("shortcut verdict disagrees with search on "
                                 "the class of " +
                                 to_string(cls.representative));
    out.push_back(GoodnessReport{cls.representative, Verdict::good, method,
                                 std::move(brute.witnesses), std::nullopt, "",
                                 g, std::move(brute.generated)});
  }
  return out;
}

EquivalenceAudit equivalence_audit(const FiniteGroup& g,
                                   const GroupElement& e) {
  ConjClass cls = g.conjugacy_class(e);
  ConjugationQuandle q = ConjugationQuandle::of_class(cls);
  FiniteGroup h = q.generated();

  bool some_regular = false;
  bool all_regular = true;
  for (const auto& action : q.translation_table()) {
    bool reg = regular_cycle_crosscheck(action);
    some_regular = some_regular || reg;
    all_regular = all_regular && reg;
  }
  bool exists_pair = false;
  for (const auto& c : cls.members) {
    if (witness_bruteforce(c, cls, h)) {
      exists_pair = true;
      break;
    }
  }
  bool every_member = true;
  for (const auto& c : cls.members) {
    if (!witness_bruteforce(c, cls, h)) {
      every_member = false;
      break;
    }
  }
  bool agreement = some_regular == exists_pair &&
                   some_regular == every_member && some_regular == all_regular;
  EquivalenceAudit audit{some_regular, exists_pair,  every_member,
                         all_regular,  true,         agreement};
  if (!agreement)
    throw EquivalenceViolation(
        "equivalent goodness conditions disagree on the class of " +
        to_string(e) + ": translations " + (some_regular ? "some" : "none") +
        "/" + (all_regular ? "all" : "not all") + ", witnesses " +
        (exists_pair ? "some" : "none") + "/" +
        (every_member ? "all" : "not all"));
  return audit;
}

bool generating_class_check(const FiniteGroup& g, const ConjClass& cls) {
  FiniteGroup h = g.generated_subgroup(cls.members);
  if (h.order() != g.order())
    throw PreconditionFailed(
        "class of " + to_string(cls.representative) +
        " generates a proper subgroup (order " + std::to_string(h.order()) +
        " of " + std::to_string(g.order()) + ")");
  return good_class(cls).verdict == Verdict::good;
}

GoodnessReport goodness_report(const ConjClass& cls, bool audit) {
  const FiniteGroup& g = cls.ambient;
  const GroupElement& rep = cls.representative;
  GoodnessReport r{rep, Verdict::undecided, Method::brute_force,
                   {},  std::nullopt,       "",
                   g,   generated_from(cls)};

  const auto& tag = g.catalog_tag();
  bool sym_family = tag.has_value() &&
                    (tag->family == CatalogFamily::symmetric ||
                     tag->family == CatalogFamily::alternating) &&
                    tag->parameter >= 5 && rep.is_permutation();
  bool commuting_small =
      cls.size() == 1 ||
      (cls.size() == 2 && g.commutes(cls.members[0], cls.members[1]));
  if (prime_power_shortcut(g, rep)) {
    r.verdict = Verdict::good;
    r.method = Method::prime_power_shortcut;
  } else if (commuting_small) {
    // <C> is abelian, so every power of every member is central and any z
    // in the class passes the criterion vacuously. Covers the singleton
    // classes that dominate abelian catalog sweeps.
    r.verdict = Verdict::good;
    r.method = Method::small_class_shortcut;
  } else if (sym_family) {
    for (const auto& c : cls.members) {
      SymWitness w = witness_sym(c.permutation());
      GroupElement z{w.z};
      if (!cls.contains(z))
        throw ConstructionPostconditionFailed(
            "constructed witness " + w.z.format() + " left the class of " +
            to_string(rep));
      r.witnesses.emplace_back(c, std::move(z));
    }
    r.verdict = Verdict::good;
    r.method = Method::sym_construction;
  } else {
    r = good_class_fast(cls);
  }

  if (audit) {
    GoodnessReport brute = good_class(cls);
    if (brute.verdict != r.verdict)
      throw EquivalenceViolation(
          "front-end verdict " + std::string(to_string(r.verdict)) +
          " disagrees with exhaustive " + to_string(brute.verdict) +
          " on the class of " + to_string(rep));
    if (r.witnesses.empty()) r.witnesses = std::move(brute.witnesses);
  }
  return r;
}

}  // namespace quandles
