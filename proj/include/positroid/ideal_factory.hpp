#pragma once

// Generators of the global positroid ideal in Q[e, D^(a)_I]:
//   - classical Pluecker quadrics in each color,
//   - Schubert vanishing D^(a)_I for I not >= J_a,
//   - binomials linking colors a and a + c through the shifts I - c, J + c.
//
// Shifted index tuples are formed elementwise in the order of the original
// subset and then sorted with the sign of the sorting permutation; this makes
// the binomials vanish on M(e)-stable tuples for every k.

#include <set>
#include <vector>

#include "positroid/ideal.hpp"
#include "positroid/pattern.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

namespace detail {

// Appends `g` unless zero or a scalar multiple of something already kept.
class GeneratorSet {
 public:
  void add(const Polynomial& g) {
    if (g.is_zero()) return;
    if (seen_.insert(g.primitive()).second) items_.push_back(g);
  }
  std::vector<Polynomial> release() && { return std::move(items_); }

 private:
  std::set<Polynomial> seen_;
  std::vector<Polynomial> items_;
};

inline std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace detail

// g_{I,J,r} = D_I D_J - sum_s D_{I'} D_{J'} where (I', J') swaps j_r with i_s.
inline std::vector<Polynomial> classical_plucker_generators(int k, int n, int color) {
  if (k <= 0 || k >= n) throw InvalidInput("classical_plucker_generators: need 0 < k < n");
  detail::GeneratorSet out;
  const auto subsets = all_ksubsets(n, k);
  for (const KSubset& I : subsets) {
    for (const KSubset& J : subsets) {
      for (int r = 0; r < k; ++r) {
        Polynomial g = plucker_var(color, I) * plucker_var(color, J);
        for (int s = 0; s < k; ++s) {
          std::vector<int> left = detail::to_vector(I.elements());
          std::vector<int> right = detail::to_vector(J.elements());
          std::swap(left[s], right[r]);
          g -= Polynomial::plucker(color, left, n) * Polynomial::plucker(color, right, n);
        }
        out.add(g);
      }
    }
  }
  return std::move(out).release();
}

// D^(a)_I for every color a and every I with not (J_a <= I).
inline std::vector<Polynomial> schubert_vanishing_generators(const JugglingPattern& pattern) {
  std::vector<Polynomial> out;
  const auto subsets = all_ksubsets(pattern.n(), pattern.k());
  for (int a = 0; a < pattern.n(); ++a)
    for (const KSubset& I : subsets)
      if (!subset_leq(pattern[a], I)) out.push_back(plucker_var(a, I));
  return out;
}

// One binomial of the family linking colors a and a + c.
struct EpsilonRelation {
  int color;
  int shift;
  KSubset left;   // I
  KSubset right;  // J
  int exponent;   // d_c(J + c) - d_c(I)
  Polynomial polynomial;
};

inline EpsilonRelation epsilon_relation(int color, int shift, const KSubset& I, const KSubset& J) {
  const int n = I.n();
  const int a = mod_n(color, n), c = mod_n(shift, n);
  std::vector<int> j_plus_c = unshift_tuple(J, c);
  std::vector<int> i_minus_c = shift_tuple(I, c);
  int d_right = d_shift(KSubset::from_unsorted(n, j_plus_c), c);
  int d_left = d_shift(I, c);
  int exponent = d_right - d_left;
  int b = mod_n(a + c, n);
  Polynomial lhs = plucker_var(a, I) * plucker_var(b, J);
  Polynomial rhs = Polynomial::plucker(a, j_plus_c, n) * Polynomial::plucker(b, i_minus_c, n);
  Polynomial eps = Polynomial::epsilon();
  Polynomial g = exponent >= 0 ? lhs - eps.pow(exponent) * rhs : eps.pow(-exponent) * lhs - rhs;
  return EpsilonRelation{a, c, I, J, exponent, std::move(g)};
}

inline std::vector<Polynomial> epsilon_relations(int k, int n) {
  if (k <= 0 || k >= n) throw InvalidInput("epsilon_relations: need 0 < k < n");
  detail::GeneratorSet out;
  const auto subsets = all_ksubsets(n, k);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (const KSubset& I : subsets)
        for (const KSubset& J : subsets) out.add(epsilon_relation(a, c, I, J).polynomial);
  return std::move(out).release();
}

inline Ideal global_positroid_ideal(const JugglingPattern& pattern) {
  const int k = pattern.k(), n = pattern.n();
  detail::GeneratorSet all;
  for (int a = 0; a < n; ++a)
    for (const Polynomial& g : classical_plucker_generators(k, n, a)) all.add(g);
  for (const Polynomial& g : schubert_vanishing_generators(pattern)) all.add(g);
  for (const Polynomial& g : epsilon_relations(k, n)) all.add(g);
  return Ideal(Ambient{k, n, true}, std::move(all).release());
}

inline Ideal specialize(const Ideal& ideal, const Rational& epsilon) { return ideal.specialize(epsilon); }

}  // namespace positroid
