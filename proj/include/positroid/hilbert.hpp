#pragma once

// Multigraded Hilbert function of Q[D^(a)_I] / I for a homogeneous ideal with
// epsilon already specialized.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/ideal.hpp"
#include "positroid/linalg.hpp"

namespace positroid {

struct HilbertLimits {
  std::size_t max_monomials = 400000;
  std::size_t max_rows = 4'000'000;
};

// All monomials in the Pluecker variables of `ambient` with multidegree m,
// in a fixed deterministic order.
inline std::vector<Monomial> monomials_of_multidegree(const Ambient& ambient, const MultiDegree& m,
                                                      std::size_t cap = 0) {
  if (static_cast<int>(m.size()) != ambient.n) throw InvalidInput("multidegree has wrong length");
  const auto subsets = all_ksubsets(ambient.n, ambient.k);
  const int vars_per_color = static_cast<int>(subsets.size());
  std::size_t expected = 1;
  for (int b = 0; b < ambient.n; ++b) {
    if (m[b] < 0) throw InvalidInput("negative multidegree entry");
    expected *= binomial(vars_per_color + m[b] - 1, m[b]);
    if (cap != 0 && expected > cap)
      throw ResourceLimit("degree component has more than " + std::to_string(cap) + " monomials");
  }

  // Per color: all multisets of size m_b, as monomials.
  std::vector<std::vector<Monomial>> per_color(ambient.n);
  for (int b = 0; b < ambient.n; ++b) {
    std::vector<int> pick(m[b], 0);
    while (true) {
      std::vector<Monomial::Factor> factors;
      for (int x : pick) factors.emplace_back(Variable::plucker(b, subsets[x]), 1);
      per_color[b].push_back(Monomial::from_factors(std::move(factors)));
      int u = m[b] - 1;
      while (u >= 0 && pick[u] == vars_per_color - 1) --u;
      if (u < 0) break;
      ++pick[u];
      for (int v = u + 1; v < m[b]; ++v) pick[v] = pick[u];
    }
  }
  std::vector<Monomial> out{Monomial()};
  for (int b = 0; b < ambient.n; ++b) {
    std::vector<Monomial> next;
    next.reserve(out.size() * per_color[b].size());
    for (const Monomial& a : out)
      for (const Monomial& c : per_color[b]) next.push_back(a * c);
    out = std::move(next);
  }
  return out;
}

// dim_Q (Q[D] / I)_m = #monomials of multidegree m - rank of { g * q } where g
// runs over generators and q over monomials completing g to multidegree m.
// Monomial generators are applied by deleting the columns they divide.
inline long graded_component_dim(const Ideal& ideal, const MultiDegree& m, const HilbertLimits& limits = {}) {
  const Ambient& ambient = ideal.ambient();
  const int n = ambient.n;
  std::vector<Monomial> killers;
  std::vector<std::pair<const Polynomial*, MultiDegree>> relations;
  for (const Polynomial& g : ideal.generators()) {
    if (g.contains_epsilon()) throw InvalidInput("graded_component_dim: specialize epsilon first");
    auto degree = g.homogeneous_multidegree(n);
    if (!degree) throw InvalidInput("graded_component_dim: generator is not multihomogeneous");
    bool fits = true;
    for (int b = 0; b < n; ++b) fits = fits && (*degree)[b] <= m[b];
    if (!fits) continue;
    if (g.size() == 1)
      killers.push_back(g.terms().begin()->first);
    else
      relations.emplace_back(&g, std::move(*degree));
  }

  std::vector<Monomial> monomials = monomials_of_multidegree(ambient, m, limits.max_monomials);
  std::map<Monomial, int> column;
  for (const Monomial& mono : monomials) {
    bool killed = false;
    for (const Monomial& kill : killers)
      if (kill.divides(mono)) {
        killed = true;
        break;
      }
    if (!killed) column.emplace(mono, static_cast<int>(column.size()));
  }
  if (column.empty()) return 0;

  SparseEchelon echelon(static_cast<int>(column.size()));
  std::size_t rows = 0;
  std::map<MultiDegree, std::vector<Monomial>> cofactor_cache;
  for (const auto& [g, degree] : relations) {
    MultiDegree rest(n);
    for (int b = 0; b < n; ++b) rest[b] = m[b] - degree[b];
    auto [it, inserted] = cofactor_cache.try_emplace(rest);
    if (inserted) it->second = monomials_of_multidegree(ambient, rest, limits.max_monomials);
    for (const Monomial& q : it->second) {
      if (++rows > limits.max_rows) throw ResourceLimit("graded_component_dim: too many rows");
      SparseEchelon::Row row;
      for (const auto& [mono, c] : g->terms()) {
        auto col = column.find(mono * q);
        if (col != column.end()) row.emplace_back(col->second, c);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      echelon.insert(std::move(row));
      if (echelon.full()) return 0;
    }
  }
  return static_cast<long>(column.size()) - echelon.rank();
}

// All multidegrees of total degree `total`, lexicographically decreasing.
inline std::vector<MultiDegree> multidegrees_of_total(int n, int total) {
  std::vector<MultiDegree> out;
  MultiDegree current(n, 0);
  std::function<void(int, int)> fill = [&](int b, int left) {
    if (b == n - 1) {
      current[b] = left;
      out.push_back(current);
      return;
    }
    for (int v = left; v >= 0; --v) {
      current[b] = v;
      fill(b + 1, left - v);
    }
  };
  fill(0, total);
  return out;
}

// Graded-lexicographic list of multidegrees with 0 <= |m| <= max_total.
inline std::vector<MultiDegree> multidegrees_up_to(int n, int max_total, bool include_zero = true) {
  std::vector<MultiDegree> out;
  for (int d = include_zero ? 0 : 1; d <= max_total; ++d)
    for (MultiDegree& m : multidegrees_of_total(n, d)) out.push_back(std::move(m));
  return out;
}

}  // namespace positroid
