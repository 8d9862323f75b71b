#pragma once

// k = 1: admissible monomials in the colored coordinates D^(b)_i, their count,
// the rewriting of arbitrary monomials into admissible ones, and a check that
// admissible monomials form a basis in a given multidegree.
//
// A monomial is admissible for J when
//   (1) b + i - 1 lies in L(J) (mod n) for every factor D^(b)_i, and
//   (2) whenever D^(b)_i is a factor with i > s (1 <= s < n), every factor
//       D^(b+s)_j satisfies j <= i - s.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "positroid/fiber.hpp"
#include "positroid/hilbert.hpp"
#include "positroid/ideal_factory.hpp"
#include "positroid/pattern.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

class ColoredMonomial {
 public:
  ColoredMonomial() = default;
  ColoredMonomial(int n, std::vector<std::vector<int>> indices) : n_(n), indices_(std::move(indices)) {
    if (n < 2) throw InvalidInput("colored monomial: need n >= 2");
    if (static_cast<int>(indices_.size()) != n) throw InvalidInput("colored monomial: need one list per vertex");
    for (auto& list : indices_) {
      for (int i : list)
        if (i < 1 || i > n) throw InvalidInput("colored monomial: index " + std::to_string(i) + " out of range");
      std::sort(list.begin(), list.end());
    }
  }

  int n() const noexcept { return n_; }
  const std::vector<int>& at(int b) const { return indices_[mod_n(b, n_)]; }
  const std::vector<std::vector<int>>& lists() const noexcept { return indices_; }

  MultiDegree multidegree() const {
    MultiDegree m;
    for (const auto& list : indices_) m.push_back(static_cast<int>(list.size()));
    return m;
  }

  // Product of all lower indices; strictly decreases under rewriting.
  Integer index_product() const {
    Integer p = 1;
    for (const auto& list : indices_)
      for (int i : list) p *= i;
    return p;
  }

  Polynomial to_polynomial() const {
    std::vector<Monomial::Factor> factors;
    for (int b = 0; b < n_; ++b)
      for (int i : indices_[b]) factors.emplace_back(Variable::plucker(b, std::uint32_t{1} << (i - 1)), 1);
    return Polynomial(Monomial::from_factors(std::move(factors)), 1);
  }

  // "D0_2*D1_1"; "1" for the empty monomial.
  std::string to_string() const {
    std::string out;
    for (int b = 0; b < n_; ++b)
      for (int i : indices_[b]) {
        if (!out.empty()) out += '*';
        out += 'D' + std::to_string(b) + '_' + std::to_string(i);
      }
    return out.empty() ? "1" : out;
  }

  friend auto operator<=>(const ColoredMonomial&, const ColoredMonomial&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> indices_;
};

namespace detail {

inline void require_k1(const JugglingPattern& pattern) {
  if (pattern.k() != 1) throw InvalidInput("admissible monomials are defined for k = 1 only");
}

inline std::vector<char> ones_mask(const JugglingPattern& pattern) {
  std::vector<char> in_l(pattern.n(), 0);
  for (int l : pattern.ones_locus()) in_l[l] = 1;
  return in_l;
}

inline bool condition_one(int b, int i, int n, const std::vector<char>& in_l) { return in_l[mod_n(b + i - 1, n)] != 0; }

struct Violation {
  int b, s, u, r;
};

// First pair (D^(b)_i, D^(b+s)_j) breaking condition (2), scanning b, s, then
// positions in each list.
inline std::optional<Violation> first_violation(const ColoredMonomial& mon) {
  const int n = mon.n();
  for (int b = 0; b < n; ++b)
    for (int s = 1; s < n; ++s) {
      const auto& here = mon.at(b);
      const auto& there = mon.at(b + s);
      for (int u = 0; u < static_cast<int>(here.size()); ++u) {
        if (here[u] <= s) continue;
        for (int r = 0; r < static_cast<int>(there.size()); ++r)
          if (there[r] > here[u] - s) return Violation{b, s, u, r};
      }
    }
  return std::nullopt;
}

}  // namespace detail

inline bool is_admissible(const ColoredMonomial& mon, const JugglingPattern& pattern) {
  detail::require_k1(pattern);
  if (mon.n() != pattern.n()) throw InvalidInput("is_admissible: size mismatch");
  const auto in_l = detail::ones_mask(pattern);
  for (int b = 0; b < mon.n(); ++b)
    for (int i : mon.at(b))
      if (!detail::condition_one(b, i, mon.n(), in_l)) return false;
  return !detail::first_violation(mon).has_value();
}

// Admissible monomials of multidegree m, ordered vertex by vertex by their
// index lists.
inline std::vector<ColoredMonomial> enumerate_admissible(const JugglingPattern& pattern, const MultiDegree& m) {
  detail::require_k1(pattern);
  const int n = pattern.n();
  if (static_cast<int>(m.size()) != n) throw InvalidInput("multidegree has wrong length");
  const auto in_l = detail::ones_mask(pattern);

  // Per vertex: weakly increasing lists of allowed indices.
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (int b = 0; b < n; ++b) {
    if (m[b] < 0) throw InvalidInput("negative multidegree entry");
    std::vector<int> allowed;
    for (int i = 1; i <= n; ++i)
      if (detail::condition_one(b, i, n, in_l)) allowed.push_back(i);
    std::vector<int> list(m[b]);
    auto fill = [&](auto&& self, int pos, std::size_t from) -> void {
      if (pos == m[b]) {
        choices[b].push_back(list);
        return;
      }
      for (std::size_t t = from; t < allowed.size(); ++t) {
        list[pos] = allowed[t];
        self(self, pos + 1, t);
      }
    };
    fill(fill, 0, 0);
  }

  std::vector<ColoredMonomial> out;
  std::vector<std::vector<int>> current(n);
  auto pick = [&](auto&& self, int b) -> void {
    if (b == n) {
      ColoredMonomial mon(n, current);
      if (!detail::first_violation(mon)) out.push_back(std::move(mon));
      return;
    }
    for (const auto& list : choices[b]) {
      current[b] = list;
      self(self, b + 1);
    }
  };
  pick(pick, 0);
  return out;
}

inline std::uint64_t count_admissible(const JugglingPattern& pattern, const MultiDegree& m) {
  return enumerate_admissible(pattern, m).size();
}

// C(|m| + l(J) - 1, |m|)
inline std::uint64_t expected_admissible_count(const JugglingPattern& pattern, const MultiDegree& m) {
  int total = 0;
  for (int x : m) total += x;
  return binomial(total + pattern.ell() - 1, total);
}

struct RewriteStep {
  int vertex;
  int shift;
  bool wrapped;
  Integer measure;  // index product after the step
};

struct NormalForm {
  int epsilon_power = 0;
  ColoredMonomial monomial;
  std::vector<RewriteStep> steps;
};

// Repeatedly replaces the first violating pair (D^(b)_i, D^(b+s)_j):
//   j <= n - s:  D^(b)_{j+s}     D^(b+s)_{i-s}
//   j >  n - s:  D^(b)_{j+s-n}   D^(b+s)_{i-s}, one more factor of e.
// The input equals e^epsilon_power times the output in the coordinate ring.
inline NormalForm rewrite_to_normal_form(const ColoredMonomial& mon) {
  NormalForm result{0, mon, {}};
  const int n = mon.n();
  while (auto v = detail::first_violation(result.monomial)) {
    auto lists = result.monomial.lists();
    auto& here = lists[v->b];
    auto& there = lists[mod_n(v->b + v->s, n)];
    const int i = here[v->u], j = there[v->r];
    const bool wrapped = j > n - v->s;
    here[v->u] = wrapped ? j + v->s - n : j + v->s;
    there[v->r] = i - v->s;
    if (wrapped) ++result.epsilon_power;
    result.monomial = ColoredMonomial(n, std::move(lists));
    result.steps.push_back(RewriteStep{v->b, v->s, wrapped, result.monomial.index_product()});
  }
  return result;
}

// As above, for the quotient by the ideal of J. Condition (1) is preserved by
// every rewriting step, so a factor violating it makes the monomial zero.
inline NormalForm rewrite_to_normal_form(const ColoredMonomial& mon, const JugglingPattern& pattern) {
  detail::require_k1(pattern);
  if (mon.n() != pattern.n()) throw InvalidInput("rewrite: size mismatch");
  const auto in_l = detail::ones_mask(pattern);
  for (int b = 0; b < mon.n(); ++b)
    for (int i : mon.at(b))
      if (!detail::condition_one(b, i, mon.n(), in_l))
        throw ZeroInQuotient("factor D" + std::to_string(b) + "_" + std::to_string(i) +
                             " vanishes for pattern " + pattern.to_string());
  return rewrite_to_normal_form(mon);
}

// Value of a monomial on a k = 1 fiber point: the product of coordinates.
inline Rational evaluate_monomial(const ColoredMonomial& mon, const FiberPoint& point) {
  Rational value = 1;
  for (int b = 0; b < mon.n(); ++b)
    for (int i : mon.at(b)) value *= point.spaces[b].basis()(0, i - 1);
  return value;
}

// Deterministic lambda vectors: one mt19937 stream per seed, entries in 1..97.
inline std::vector<std::vector<Rational>> sample_lambdas(int ell, const std::vector<std::uint32_t>& seeds,
                                                         std::size_t per_seed) {
  std::vector<std::vector<Rational>> out;
  for (std::uint32_t seed : seeds) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 97);
    for (std::size_t t = 0; t < per_seed; ++t) {
      std::vector<Rational> lambda;
      for (int l = 0; l < ell; ++l) lambda.emplace_back(dist(rng));
      out.push_back(std::move(lambda));
    }
  }
  return out;
}

// Dimension of the degree-m part at one epsilon: for the ideal as generated
// and for its saturation by the irrelevant ideal (the coordinate ring of the
// fiber). The two differ when some m_b = 0.
struct BasisDimension {
  Rational epsilon;
  long generated;
  long saturated;
};

struct BasisReport {
  JugglingPattern pattern;
  MultiDegree multidegree;
  std::vector<ColoredMonomial> admissible;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  std::vector<BasisDimension> dimensions;
  int evaluation_rank = 0;
  std::size_t samples = 0;
  bool pass = false;
};

// (a) count_admissible = dimension of the degree-m part of the fiber's
// coordinate ring at every epsilon, (b) the admissible monomials are linearly
// independent on sampled points at e = 1.
inline BasisReport verify_basis(const JugglingPattern& pattern, const MultiDegree& m,
                                const std::vector<Rational>& epsilons, const std::vector<std::uint32_t>& seeds,
                                const HilbertLimits& limits = {}) {
  detail::require_k1(pattern);
  if (seeds.empty()) throw InvalidInput("verify_basis: empty seed list");
  BasisReport report{pattern, m, enumerate_admissible(pattern, m), 0, 0, {}, 0, 0, false};
  report.count = report.admissible.size();
  report.expected = expected_admissible_count(pattern, m);

  const Ideal global = global_positroid_ideal(pattern);
  bool dims_match = true;
  for (const Rational& eps : epsilons) {
    const Ideal fiber = specialize(global, eps);
    long generated = graded_component_dim(fiber, m, limits);
    long saturated = graded_component_dim(saturate_irrelevant(fiber), m, limits);
    report.dimensions.push_back({eps, generated, saturated});
    dims_match = dims_match && saturated == static_cast<long>(report.count);
  }

  const int columns = static_cast<int>(report.count);
  std::size_t per_seed = std::max<std::size_t>(1, (report.count + 4 + seeds.size() - 1) / seeds.size());
  for (int attempt = 0; attempt < 4 && report.evaluation_rank < columns; ++attempt, per_seed *= 2) {
    SparseEchelon echelon(columns);
    const auto lambdas = sample_lambdas(pattern.ell(), seeds, per_seed);
    for (const auto& lambda : lambdas) {
      FiberPoint point = k1_point(pattern, lambda, 1);
      SparseEchelon::Row row;
      for (int c = 0; c < columns; ++c) {
        Rational v = evaluate_monomial(report.admissible[c], point);
        if (v != 0) row.emplace_back(c, v);
      }
      echelon.insert(std::move(row));
      if (echelon.full()) break;
    }
    report.evaluation_rank = echelon.rank();
    report.samples = lambdas.size();
  }
  report.pass = dims_match && report.evaluation_rank == columns;
  return report;
}

}  // namespace positroid
