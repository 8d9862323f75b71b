#pragma once

// Independent reference computations used by the tests. Everything here is
// written from the definitions with plain containers, without calling the
// library routine it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "positroid/positroid.hpp"

namespace oracle {

using positroid::Rational;
using Entries = std::vector<std::vector<int>>;

// k-subsets of [n] as sorted lists, by bitmask enumeration.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

// j in J_b, j > 1 implies j - 1 in J_{b+1}.
inline bool is_pattern(const Entries& entries) {
  const int n = static_cast<int>(entries.size());
  for (int b = 0; b < n; ++b)
    for (int j : entries[b])
      if (j > 1 && !has(entries[(b + 1) % n], j - 1)) return false;
  return true;
}

// Every n-tuple of k-subsets, filtered by the decrement condition.
inline std::vector<Entries> all_patterns(int k, int n) {
  const auto pool = subsets(n, k);
  std::vector<Entries> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Entries e;
    for (int b = 0; b < n; ++b) e.push_back(pool[idx[b]]);
    if (is_pattern(e)) out.push_back(e);
    int b = n - 1;
    while (b >= 0 && ++idx[b] == pool.size()) idx[b--] = 0;
    if (b < 0) break;
  }
  return out;
}

inline Entries entries_of(const positroid::JugglingPattern& p) {
  Entries out;
  for (const auto& e : p.entries()) out.emplace_back(e.elements().begin(), e.elements().end());
  return out;
}

// i -> i - c in [n], as a cyclic residue.
inline int minus_mod(int i, int c, int n) { return ((i - 1 - c) % n + n) % n + 1; }

// Sign of the permutation sorting `v` (distinct entries).
inline int sort_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) sign = -sign;
  return sign;
}

// Leibniz expansion of det of the columns `cols` (1-based) of a k x n matrix.
inline Rational minor(const std::vector<std::vector<Rational>>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = sort_sign(perm);
    for (int r = 0; r < k; ++r) term *= rows[r][cols[perm[r]] - 1];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<Rational>> random_matrix(std::mt19937& rng, int k, int n, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(n));
  for (auto& row : rows)
    for (auto& x : row) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
  return rows;
}

inline std::uint64_t choose(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

// Number of monomials of multidegree m in C(n,k) variables per color.
inline std::uint64_t monomial_count(int n, int k, const std::vector<int>& m) {
  std::uint64_t vars = choose(n, k), out = 1;
  for (int d : m) out *= choose(static_cast<int>(vars) + d - 1, d);
  return out;
}

}  // namespace oracle
