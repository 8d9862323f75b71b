#pragma once

#include <compare>

#include "positroid/polynomial.hpp"

namespace positroid {

// Term orders. The first two compare the Pluecker part of a monomial first
// and break ties by the epsilon exponent; the third compares the epsilon
// exponent first, which eliminates epsilon.
enum class MonomialOrder {
  kBlockGrevlex,     // graded reverse lexicographic on Pluecker variables (default)
  kBlockLex,         // lexicographic on Pluecker variables
  kEliminateEpsilon, // epsilon exponent, then graded reverse lexicographic
};

namespace detail {

inline std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.plucker_degree() <=> b.plucker_degree(); c != 0) return c;
  // Walk from the smallest variable upwards; the first differing exponent
  // decides, and the larger exponent makes the monomial smaller.
  auto fa = a.factors(), fb = b.factors();
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(fa.size()) - 1;
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(fb.size()) - 1;
  if (i >= 0 && fa[i].first.is_epsilon()) --i;
  if (j >= 0 && fb[j].first.is_epsilon()) --j;
  while (i >= 0 || j >= 0) {
    if (j < 0 || (i >= 0 && fb[j].first < fa[i].first)) return std::strong_ordering::less;
    if (i < 0 || fa[i].first < fb[j].first) return std::strong_ordering::greater;
    if (fa[i].second != fb[j].second) return fb[j].second <=> fa[i].second;
    --i, --j;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) {
  auto fa = a.factors(), fb = b.factors();
  std::size_t na = fa.size() - (a.epsilon_exponent() > 0 ? 1 : 0);
  std::size_t nb = fb.size() - (b.epsilon_exponent() > 0 ? 1 : 0);
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    if (j == nb) return std::strong_ordering::greater;
    if (i == na) return std::strong_ordering::less;
    if (fa[i].first < fb[j].first) return std::strong_ordering::greater;
    if (fb[j].first < fa[i].first) return std::strong_ordering::less;
    if (fa[i].second != fb[j].second) return fa[i].second <=> fb[j].second;
    ++i, ++j;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (order == MonomialOrder::kEliminateEpsilon) {
    if (auto e = a.epsilon_exponent() <=> b.epsilon_exponent(); e != 0) return e;
    return detail::compare_grevlex(a, b);
  }
  auto c = order == MonomialOrder::kBlockLex ? detail::compare_lex(a, b) : detail::compare_grevlex(a, b);
  if (c != 0) return c;
  return a.epsilon_exponent() <=> b.epsilon_exponent();
}

struct OrderLess {
  MonomialOrder order = MonomialOrder::kBlockGrevlex;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) < 0; }
};

// Leading monomial and coefficient; the polynomial must be nonzero.
inline std::pair<Monomial, Rational> leading_term(const Polynomial& p, MonomialOrder order) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (compare(order, it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

// Terms sorted from largest to smallest.
inline std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p, MonomialOrder order) {
  std::vector<std::pair<Monomial, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [order](const auto& x, const auto& y) { return compare(order, x.first, y.first) > 0; });
  return out;
}

}  // namespace positroid
