#pragma once

// Buchberger's algorithm over Q with the product and chain criteria, full
// normal forms, and the combinatorial Krull dimension of a leading ideal.

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/order.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

struct GroebnerLimits {
  std::size_t max_basis_size = 20000;
  unsigned max_degree = 64;
  std::size_t max_pairs = 5'000'000;
};

// A reduced Groebner basis: monic, sorted by leading monomial (decreasing).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
      : order_(order), elements_(std::move(elements)) {
    for (const Polynomial& g : elements_) leading_.push_back(leading_term(g, order_).first);
  }

  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && leading_.front().is_one(); }

 private:
  MonomialOrder order_ = MonomialOrder::kBlockGrevlex;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
};

namespace detail {

// Fully reduces `p` modulo `basis` (with precomputed leading data).
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis,
                         const std::vector<Monomial>& leads, const std::vector<Rational>& lead_coeffs,
                         MonomialOrder order) {
  Polynomial remainder;
  while (!p.is_zero()) {
    auto [lm, lc] = leading_term(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].divides(lm)) continue;
      p -= basis[i].times(leads[i].quotient_of(lm), lc / lead_coeffs[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

inline Polynomial s_polynomial(const Polynomial& f, const Monomial& lf, const Rational& cf,
                               const Polynomial& g, const Monomial& lg, const Rational& cg) {
  Monomial l = lcm(lf, lg);
  return f.times(lf.quotient_of(l), 1 / cf) - g.times(lg.quotient_of(l), 1 / cg);
}

inline Polynomial monic(const Polynomial& p, MonomialOrder order) {
  Rational lc = leading_term(p, order).second;
  return p * (1 / lc);
}

}  // namespace detail

inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                                MonomialOrder order = MonomialOrder::kBlockGrevlex,
                                const GroebnerLimits& limits = {}) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  std::vector<Rational> coeffs;
  std::vector<bool> active;

  struct Pair {
    unsigned degree;
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [order](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (auto c = compare(order, a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  std::size_t pairs_seen = 0;

  auto add_element = [&](Polynomial p) {
    p = p.primitive();
    auto [lm, lc] = leading_term(p, order);
    if (lm.degree() > limits.max_degree)
      throw ResourceLimit("Groebner basis element of degree " + std::to_string(lm.degree()) +
                          " exceeds cap " + std::to_string(limits.max_degree));
    std::size_t idx = basis.size();
    if (idx + 1 > limits.max_basis_size)
      throw ResourceLimit("Groebner basis exceeds " + std::to_string(limits.max_basis_size) +
                          " elements");
    basis.push_back(std::move(p));
    leads.push_back(lm);
    coeffs.push_back(lc);
    active.push_back(true);
    for (std::size_t i = 0; i < idx; ++i) {
      if (!active[i]) continue;
      Monomial l = lcm(leads[i], lm);
      pending.insert(Pair{l.degree(), l, i, idx});
      pending_index.emplace(i, idx);
      if (++pairs_seen > limits.max_pairs) throw ResourceLimit("too many S-pairs");
    }
  };

  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = detail::reduce(g, basis, leads, coeffs, order);
    if (!r.is_zero()) add_element(std::move(r));
  }

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({pr.i, pr.j});
    if (leads[pr.i].coprime(leads[pr.j])) continue;
    bool chain = false;
    for (std::size_t t = 0; t < basis.size() && !chain; ++t) {
      if (t == pr.i || t == pr.j) continue;
      if (leads[t].divides(pr.lcm) && !is_pending(pr.i, t) && !is_pending(pr.j, t)) chain = true;
    }
    if (chain) continue;
    Polynomial s = detail::s_polynomial(basis[pr.i], leads[pr.i], coeffs[pr.i], basis[pr.j],
                                        leads[pr.j], coeffs[pr.j]);
    Polynomial r = detail::reduce(std::move(s), basis, leads, coeffs, order);
    if (!r.is_zero()) add_element(std::move(r));
  }

  // Minimize, then interreduce into the reduced basis.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      redundant = !(leads[i] == leads[j]) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> min_leads;
  std::vector<Rational> min_coeffs;
  for (std::size_t i : keep) {
    minimal.push_back(detail::monic(basis[i], order));
    min_leads.push_back(leads[i]);
    min_coeffs.push_back(1);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_leads;
    std::vector<Rational> other_coeffs;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_leads.push_back(min_leads[j]);
      other_coeffs.push_back(1);
    }
    Polynomial tail = minimal[i];
    tail.add_term(min_leads[i], -1);
    Polynomial r = detail::reduce(std::move(tail), others, other_leads, other_coeffs, order);
    r.add_term(min_leads[i], 1);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(order, leading_term(a, order).first, leading_term(b, order).first) > 0;
  });
  return GroebnerBasis(order, std::move(reduced));
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  std::vector<Rational> ones(basis.size(), Rational(1));
  return detail::reduce(p, basis.elements(), basis.leading_monomials(), ones, basis.order());
}

// Dimension of K[vars]/I computed from in(I): the largest set of variables
// containing the support of no leading monomial. `ring_variables` lists every
// variable of the ambient ring (including ones absent from the basis).
inline int krull_dimension(const GroebnerBasis& basis, const std::vector<Variable>& ring_variables) {
  if (basis.is_unit()) return -1;
  std::vector<Variable> vars = ring_variables;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto index_of = [&](const Variable& v) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it == vars.end() || !(*it == v)) throw InvalidInput("basis uses a variable outside the ring");
    return static_cast<std::size_t>(it - vars.begin());
  };

  // Supports as sorted index lists; keep only inclusion-minimal ones.
  std::vector<std::vector<std::size_t>> supports;
  for (const Monomial& m : basis.leading_monomials()) {
    std::vector<std::size_t> s;
    for (const auto& f : m.factors()) s.push_back(index_of(f.first));
    std::sort(s.begin(), s.end());
    supports.push_back(std::move(s));
  }
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& s : supports) {
    bool dominated = false;
    for (const auto& e : edges)
      if (std::includes(s.begin(), s.end(), e.begin(), e.end())) {
        dominated = true;
        break;
      }
    if (!dominated) edges.push_back(s);
  }

  // Minimum hitting set by branch and bound: branch on the vertices of the
  // smallest edge not yet hit.
  std::vector<char> chosen(vars.size(), 0);
  std::size_t best = vars.size() + 1;
  auto search = [&](auto&& self, std::size_t used) -> void {
    if (used >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& e : edges) {
      bool hit = false;
      for (std::size_t v : e)
        if (chosen[v]) {
          hit = true;
          break;
        }
      if (!hit && (open == nullptr || e.size() < open->size())) open = &e;
    }
    if (open == nullptr) {
      best = used;
      return;
    }
    if (used + 1 >= best) return;
    for (std::size_t v : *open) {
      chosen[v] = 1;
      self(self, used + 1);
      chosen[v] = 0;
    }
  };
  search(search, 0);
  return static_cast<int>(vars.size() - best);
}

}  // namespace positroid
