#pragma once

// Combinatorics of k-subsets of [n] and cyclic juggling patterns.
//
// Conventions: subset elements live in 1..n, vertices (colors) of the cyclic
// quiver live in 0..n-1. Every wrap-around is normalized into these ranges.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "positroid/error.hpp"

namespace positroid {

inline int mod_n(long long value, int n) {
  long long r = value % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline std::uint64_t binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  std::uint64_t result = 1;
  for (int i = 1; i <= bottom; ++i) result = result * (top - bottom + i) / i;
  return result;
}

// A strictly increasing k-tuple of elements of [n].
class KSubset {
 public:
  KSubset() = default;

  KSubset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
    if (n_ <= 0 || n_ > 31) throw InvalidInput("ambient size out of range: " + std::to_string(n_));
    for (std::size_t u = 0; u < elements_.size(); ++u) {
      if (elements_[u] < 1 || elements_[u] > n_)
        throw InvalidInput("subset element " + std::to_string(elements_[u]) + " outside [1," +
                           std::to_string(n_) + "]");
      if (u > 0 && elements_[u - 1] >= elements_[u])
        throw InvalidInput("subset elements must be strictly increasing");
    }
  }

  // Sorts and deduplicates-checks an arbitrary collection of elements.
  static KSubset from_unsorted(int n, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    return KSubset(n, std::move(elements));
  }

  static KSubset from_mask(int n, std::uint32_t mask) {
    std::vector<int> elements;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) elements.push_back(i);
    return KSubset(n, std::move(elements));
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const noexcept { return elements_; }
  int operator[](std::size_t u) const { return elements_[u]; }

  bool contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

  std::uint32_t mask() const noexcept {
    std::uint32_t m = 0;
    for (int i : elements_) m |= 1u << (i - 1);
    return m;
  }

  // Lexicographic on the sorted element lists (then on n, for totality).
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
    if (auto c = a.elements_ <=> b.elements_; c != 0) return c;
    return a.n_ <=> b.n_;
  }
  friend bool operator==(const KSubset&, const KSubset&) = default;

  std::string to_string() const {
    bool digits = n_ <= 9;
    std::string out;
    for (std::size_t u = 0; u < elements_.size(); ++u) {
      if (!digits && u > 0) out += ',';
      out += std::to_string(elements_[u]);
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

// All k-subsets of [n] in lexicographic order.
inline std::vector<KSubset> all_ksubsets(int n, int k) {
  std::vector<KSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> current(k);
  for (int u = 0; u < k; ++u) current[u] = u + 1;
  while (true) {
    out.emplace_back(n, current);
    int u = k - 1;
    while (u >= 0 && current[u] == n - k + u + 1) --u;
    if (u < 0) break;
    ++current[u];
    for (int v = u + 1; v < k; ++v) current[v] = current[v - 1] + 1;
  }
  return out;
}

// Componentwise order: I <= J iff i_u <= j_u for all u.
inline bool subset_leq(const KSubset& lhs, const KSubset& rhs) {
  if (lhs.n() != rhs.n() || lhs.k() != rhs.k()) throw InvalidInput("subset_leq: size mismatch");
  for (int u = 0; u < lhs.k(); ++u)
    if (lhs[u] > rhs[u]) return false;
  return true;
}

// d_c(I): number of elements of I that wrap under the shift by c.
inline int d_shift(const KSubset& subset, int c) {
  int shift = mod_n(c, subset.n());
  int count = 0;
  for (int i : subset.elements())
    if (i <= shift) ++count;
  return count;
}

// Elementwise image of I under i -> i - c (mod n, into [n]), keeping the order
// of the elements of I. The result is generally not sorted.
inline std::vector<int> shift_tuple(const KSubset& subset, int c) {
  int n = subset.n(), shift = mod_n(c, n);
  std::vector<int> out;
  out.reserve(subset.k());
  for (int i : subset.elements()) out.push_back(i > shift ? i - shift : i - shift + n);
  return out;
}

// Elementwise image of J under j -> j + c (mod n, into [n]); inverse of shift_tuple.
inline std::vector<int> unshift_tuple(const KSubset& subset, int c) {
  int n = subset.n(), shift = mod_n(c, n);
  std::vector<int> out;
  out.reserve(subset.k());
  for (int j : subset.elements()) out.push_back(j + shift <= n ? j + shift : j + shift - n);
  return out;
}

// I - c as a set.
inline KSubset shift_subset(const KSubset& subset, int c) {
  return KSubset::from_unsorted(subset.n(), shift_tuple(subset, c));
}

// I + c, the inverse of shift_subset.
inline KSubset unshift_subset(const KSubset& subset, int c) {
  return KSubset::from_unsorted(subset.n(), unshift_tuple(subset, c));
}

// A k-subset S of Z_n, stored as sorted representatives 0..n-1.
class AnchorSet {
 public:
  AnchorSet(int n, std::vector<int> elements) : n_(n) {
    if (n <= 0) throw InvalidInput("anchor set: n must be positive");
    for (int& s : elements) s = mod_n(s, n);
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
      throw InvalidInput("anchor set: repeated element");
    elements_ = std::move(elements);
    if (k() <= 0 || k() >= n) throw InvalidInput("anchor set: need 0 < |S| < n");
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const noexcept { return elements_; }
  bool contains(int s) const {
    return std::binary_search(elements_.begin(), elements_.end(), mod_n(s, n_));
  }

  friend auto operator<=>(const AnchorSet&, const AnchorSet&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

// All anchor sets of size k in Z_n, lexicographic.
inline std::vector<AnchorSet> all_anchor_sets(int n, int k) {
  std::vector<AnchorSet> out;
  for (const KSubset& subset : all_ksubsets(n, k)) {
    std::vector<int> elements;
    for (int i : subset.elements()) elements.push_back(i - 1);
    out.emplace_back(n, std::move(elements));
  }
  return out;
}

// First failure found while validating a candidate pattern.
struct PatternDefect {
  enum class Kind { kCardinality, kOutOfRange, kNotIncreasing, kDecrement };
  Kind kind;
  int vertex;
  int element;  // offending element for kOutOfRange / kDecrement, else 0
};

// A cyclic n-tuple (J_0, ..., J_{n-1}) of k-subsets of [n] with J_b - 1 in J_{b+1}.
class JugglingPattern {
 public:
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const KSubset& operator[](int b) const { return entries_[mod_n(b, n_)]; }
  std::span<const KSubset> entries() const noexcept { return entries_; }

  // L(J): vertices b with 1 in J_b.
  std::vector<int> ones_locus() const {
    std::vector<int> out;
    for (int b = 0; b < n_; ++b)
      if (entries_[b].contains(1)) out.push_back(b);
    return out;
  }
  int ell() const { return static_cast<int>(ones_locus().size()); }

  bool is_constant_minimal() const {
    for (const KSubset& entry : entries_)
      if (entry[k_ - 1] != k_) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int b = 0; b < n_; ++b) {
      if (b > 0) out += (k_ == 1 ? "," : "|");
      out += entries_[b].to_string();
    }
    return out;
  }

  friend std::strong_ordering operator<=>(const JugglingPattern& a, const JugglingPattern& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const JugglingPattern&, const JugglingPattern&) = default;

  friend JugglingPattern validate_pattern(int k, int n, const std::vector<std::vector<int>>& entries);
  friend JugglingPattern rotate(const JugglingPattern& pattern, int steps);

 private:
  JugglingPattern(int k, int n, std::vector<KSubset> entries)
      : k_(k), n_(n), entries_(std::move(entries)) {}

  int k_ = 0;
  int n_ = 0;
  std::vector<KSubset> entries_;
};

// Returns the first defect of a candidate tuple, scanning vertices in order and
// elements in increasing order, or nullopt if it is a juggling pattern.
inline std::optional<PatternDefect> find_pattern_defect(
    int k, int n, const std::vector<std::vector<int>>& entries) {
  using Kind = PatternDefect::Kind;
  for (int b = 0; b < n; ++b) {
    const auto& entry = entries[b];
    if (static_cast<int>(entry.size()) != k) return PatternDefect{Kind::kCardinality, b, 0};
    for (std::size_t u = 0; u < entry.size(); ++u) {
      if (entry[u] < 1 || entry[u] > n) return PatternDefect{Kind::kOutOfRange, b, entry[u]};
      if (u > 0 && entry[u - 1] >= entry[u]) return PatternDefect{Kind::kNotIncreasing, b, 0};
    }
  }
  for (int b = 0; b < n; ++b) {
    const auto& next = entries[mod_n(b + 1, n)];
    for (int j : entries[b])
      if (j > 1 && !std::binary_search(next.begin(), next.end(), j - 1))
        return PatternDefect{Kind::kDecrement, b, j};
  }
  return std::nullopt;
}

inline JugglingPattern validate_pattern(int k, int n, const std::vector<std::vector<int>>& entries) {
  if (k <= 0 || k >= n) throw InvalidInput("pattern: need 0 < k < n");
  if (n > 31) throw InvalidInput("pattern: n > 31 unsupported");
  if (static_cast<int>(entries.size()) != n)
    throw InvalidInput("pattern: expected " + std::to_string(n) + " entries, got " +
                       std::to_string(entries.size()));
  if (auto defect = find_pattern_defect(k, n, entries)) {
    using Kind = PatternDefect::Kind;
    std::string where = " at vertex " + std::to_string(defect->vertex);
    switch (defect->kind) {
      case Kind::kCardinality:
        throw InvalidInput("pattern: entry of wrong cardinality" + where);
      case Kind::kOutOfRange:
        throw InvalidInput("pattern: element " + std::to_string(defect->element) +
                           " out of range" + where);
      case Kind::kNotIncreasing:
        throw InvalidInput("pattern: entry not strictly increasing" + where);
      case Kind::kDecrement:
        throw PatternViolation(defect->vertex, defect->element);
    }
  }
  std::vector<KSubset> subsets;
  subsets.reserve(n);
  for (const auto& entry : entries) subsets.emplace_back(n, entry);
  return JugglingPattern(k, n, std::move(subsets));
}

// rot^steps: entry b of the result is entry b + steps of the input.
inline JugglingPattern rotate(const JugglingPattern& pattern, int steps) {
  int n = pattern.n();
  std::vector<KSubset> entries;
  entries.reserve(n);
  for (int b = 0; b < n; ++b) entries.push_back(pattern[b + steps]);
  return JugglingPattern(pattern.k(), n, std::move(entries));
}

inline bool pattern_leq(const JugglingPattern& lhs, const JugglingPattern& rhs) {
  if (lhs.k() != rhs.k() || lhs.n() != rhs.n()) throw InvalidInput("pattern_leq: size mismatch");
  for (int b = 0; b < lhs.n(); ++b)
    if (!subset_leq(lhs[b], rhs[b])) return false;
  return true;
}

struct EnumerationLimits {
  int max_n = 8;
};

// All (k, n) juggling patterns, lexicographic on (J_0, ..., J_{n-1}).
//
// Backtracking: J_0 ranges over all k-subsets; J_{b+1} ranges over the k-subsets
// containing J_b - 1; the cyclic closure J_{n-1} - 1 in J_0 is checked last.
inline std::vector<JugglingPattern> enumerate_patterns(int k, int n, EnumerationLimits limits = {}) {
  if (k <= 0 || k >= n) throw InvalidInput("enumerate_patterns: need 0 < k < n");
  if (n > limits.max_n)
    throw ResourceLimit("enumerate_patterns: n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_n));
  const std::vector<KSubset> subsets = all_ksubsets(n, k);
  std::vector<std::uint32_t> masks;
  for (const KSubset& s : subsets) masks.push_back(s.mask());
  // Bits of J - 1 for J given as a mask: drop element 1, shift the rest down.
  auto decrement = [](std::uint32_t mask) { return mask >> 1; };

  std::vector<JugglingPattern> out;
  std::vector<int> choice(n, -1);
  std::vector<std::vector<int>> entries(n);
  int b = 0;
  while (b >= 0) {
    std::uint32_t required = b == 0 ? 0u : decrement(masks[choice[b - 1]]);
    int next = choice[b] + 1;
    while (next < static_cast<int>(subsets.size()) && (masks[next] & required) != required) ++next;
    if (next == static_cast<int>(subsets.size())) {
      choice[b] = -1;
      --b;
      continue;
    }
    choice[b] = next;
    if (b + 1 < n) {
      ++b;
      continue;
    }
    std::uint32_t closure = decrement(masks[choice[n - 1]]);
    if ((masks[choice[0]] & closure) == closure) {
      for (int v = 0; v < n; ++v) {
        auto span = subsets[choice[v]].elements();
        entries[v].assign(span.begin(), span.end());
      }
      out.push_back(validate_pattern(k, n, entries));
    }
  }
  return out;
}

// J(S): the pattern with n in J_b exactly for b in S, J(S)_b = {s - b : s in S} in [n].
inline JugglingPattern pattern_from_anchor(const AnchorSet& anchor) {
  int n = anchor.n(), k = anchor.k();
  std::vector<std::vector<int>> entries(n);
  for (int b = 0; b < n; ++b) {
    for (int s : anchor.elements()) {
      int value = s - b;
      entries[b].push_back(value <= 0 ? value + n : value);
    }
    std::sort(entries[b].begin(), entries[b].end());
  }
  return validate_pattern(k, n, entries);
}

// Anchor sets S with J <= J(S); one per irreducible component of the special fiber.
inline std::vector<AnchorSet> components_of_special_fiber(const JugglingPattern& pattern) {
  std::vector<AnchorSet> out;
  for (AnchorSet& anchor : all_anchor_sets(pattern.n(), pattern.k()))
    if (pattern_leq(pattern, pattern_from_anchor(anchor))) out.push_back(std::move(anchor));
  return out;
}

// The pattern with every entry equal to {1, ..., k}.
inline JugglingPattern constant_pattern(int k, int n) {
  std::vector<int> entry(k);
  for (int u = 0; u < k; ++u) entry[u] = u + 1;
  return validate_pattern(k, n, std::vector<std::vector<int>>(n, entry));
}

}  // namespace positroid
