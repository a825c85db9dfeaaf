#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quandles {

enum class Parity { even, odd };

/// Cycle lengths of a permutation as (length, multiplicity) pairs with
/// strictly increasing lengths. Fixed points count as cycles of length 1,
/// so the weighted sum of an n-point permutation's entries is always n.
class CycleStructure {
public:
  using Entry = std::pair<int, int>;  // (length, multiplicity)

  explicit CycleStructure(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  int degree() const;
  std::int64_t order_lcm() const;

  /// True iff every cycle length divides the largest one.
  bool has_regular_cycle() const;

  /// e.g. "(1^2, 3^1)"; "(1^5)" for the identity on five points.
  std::string to_string() const;

  bool operator==(const CycleStructure&) const = default;
  auto operator<=>(const CycleStructure&) const = default;

private:
  std::vector<Entry> entries_;
};

/// Bijection on {1, ..., n}. Points are 1-based in the public interface and
/// in all notation. Values are immutable once constructed.
///
/// Composition applies the right factor first: (p * q)(x) = p(q(x)).
class Permutation {
public:
  static Permutation identity(int degree);

  /// `images` lists the image of point i at position i-1 (1-based values).
  static Permutation from_images(std::vector<int> images);

  /// Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the
  /// identity. Points must lie in 1..degree and may appear at most once
  /// across all cycles.
  static Permutation parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const;

  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  std::int64_t order() const;
  Parity parity() const;
  CycleStructure cycle_structure() const;

  /// Length of the cycle through `point`.
  int cycle_length_at(int point) const;

  /// Canonical notation: cycles sorted by smallest moved point, each cycle
  /// rotated to start at its smallest point, fixed points omitted; the
  /// identity prints as "()".
  std::string format() const;

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& o) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);

  std::size_t hash() const;

private:
  explicit Permutation(std::vector<int> zero_based, int);
  std::vector<int> images_;  // 0-based internally
  friend Permutation conjugate(const Permutation&, const Permutation&);
};

/// g x g^-1; relabels the cycles of x through g.
Permutation conjugate(const Permutation& g, const Permutation& x);

}  // namespace quandles

template <>
struct std::hash<quandles::Permutation> {
  std::size_t operator()(const quandles::Permutation& p) const {
    return p.hash();
  }
};
