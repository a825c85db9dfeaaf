#include "quandles/perm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

#include "quandles/errors.hpp"

namespace quandles {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t q = a / g;
  if (q > std::numeric_limits<std::int64_t>::max() / b)
    throw Error("permutation order overflows 64 bits");
  return q * b;
}

}  // namespace

CycleStructure::CycleStructure(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  int prev = 0;
  for (const auto& [len, mult] : entries_) {
    if (len <= prev || mult <= 0)
      throw Error("cycle structure entries must have strictly increasing "
                  "lengths and positive multiplicities");
    prev = len;
  }
}

int CycleStructure::degree() const {
  int n = 0;
  for (const auto& [len, mult] : entries_) n += len * mult;
  return n;
}

std::int64_t CycleStructure::order_lcm() const {
  std::int64_t l = 1;
  for (const auto& [len, mult] : entries_) l = checked_lcm(l, len);
  return l;
}

bool CycleStructure::has_regular_cycle() const {
  if (entries_.empty()) return false;
  int longest = entries_.back().first;
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return longest % e.first == 0; });
}

std::string CycleStructure::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries_[i].first) + "^" +
           std::to_string(entries_[i].second);
  }
  return out + ")";
}

Permutation::Permutation(std::vector<int> zero_based, int)
    : images_(std::move(zero_based)) {}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw ParameterOutOfRange("degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw ParameterOutOfRange("degree must be positive");
  std::vector<bool> seen(n, false);
  for (int& v : images) {
    if (v < 1 || v > n) throw PointOutOfRange("image " + std::to_string(v) +
                                              " outside 1.." + std::to_string(n));
    if (seen[v - 1]) throw RepeatedPoint("image " + std::to_string(v) +
                                         " listed twice");
    seen[v - 1] = true;
    --v;  // store 0-based
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw ParameterOutOfRange("degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> seen(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size()) throw MalformedCycle("empty cycle expression");
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedCycle(std::string("expected '(' at \"") +
                           std::string(text.substr(i)) + "\"");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw MalformedCycle("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedCycle(std::string("unexpected character '") + text[i] +
                             "' inside cycle");
      long val = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        val = val * 10 + (text[i] - '0');
        if (val > degree + 1L) break;  // avoid overflow on absurd input
        ++i;
      }
      if (val < 1 || val > degree)
        throw PointOutOfRange("point " + std::to_string(val) + " outside 1.." +
                              std::to_string(degree));
      if (seen[val - 1])
        throw RepeatedPoint("point " + std::to_string(val) +
                            " appears more than once");
      seen[val - 1] = true;
      cyc.push_back(static_cast<int>(val - 1));
    }
    for (std::size_t j = 0; j < cyc.size(); ++j)
      im[cyc[j]] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im), 0);
}

int Permutation::apply(int point) const {
  if (point < 1 || point > degree())
    throw PointOutOfRange("point " + std::to_string(point) + " outside 1.." +
                          std::to_string(degree()));
  return images_[point - 1] + 1;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("composing permutations of degrees " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<int> im(p.images_.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = p.images_[q.images_[x]];
  return Permutation(std::move(im), 0);
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) im[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(im), 0);
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  if (g.degree() != x.degree())
    throw DegreeMismatch("conjugating across degrees " +
                         std::to_string(g.degree()) + " and " +
                         std::to_string(x.degree()));
  std::vector<int> im(g.images_.size());
  for (std::size_t p = 0; p < im.size(); ++p)
    im[g.images_[p]] = g.images_[x.images_[p]];
  return Permutation(std::move(im), 0);
}

Permutation Permutation::pow(std::int64_t k) const {
  const int n = degree();
  if (k < 0) return inverse().pow(-k);
  Permutation acc = identity(n);
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::int64_t Permutation::order() const {
  std::int64_t ord = 1;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      ++len;
    }
    ord = checked_lcm(ord, len);
  }
  return ord;
}

Parity Permutation::parity() const {
  int cycles = 0;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t p = start; !visited[p]; p = images_[p]) visited[p] = true;
  }
  return (degree() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

CycleStructure Permutation::cycle_structure() const {
  std::map<int, int> counts;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      ++len;
    }
    ++counts[len];
  }
  std::vector<CycleStructure::Entry> entries(counts.begin(), counts.end());
  return CycleStructure(std::move(entries));
}

int Permutation::cycle_length_at(int point) const {
  if (point < 1 || point > degree())
    throw PointOutOfRange("point " + std::to_string(point) + " outside 1.." +
                          std::to_string(degree()));
  int len = 1;
  for (int p = images_[point - 1]; p != point - 1; p = images_[p]) ++len;
  return len;
}

std::string Permutation::format() const {
  std::string out;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    bool first = true;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (auto c = images_[x] <=> o.images_[x]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h ^ images_.size();
}

}  // namespace quandles
