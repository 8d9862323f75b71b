#pragma once

#include <optional>
#include <string>
#include <vector>

#include "positroid/groebner.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

// The ring Q[e, D^(a)_I] (or Q[D^(a)_I] once epsilon is specialized) for
// fixed (k, n), with colors a in Z_n.
struct Ambient {
  int k = 1;
  int n = 2;
  bool with_epsilon = true;

  std::vector<Variable> variables() const {
    std::vector<Variable> vars = plucker_variables(k, n);
    if (with_epsilon) vars.push_back(Variable::epsilon());
    return vars;
  }

  bool owns(const Variable& v) const {
    if (v.is_epsilon()) return with_epsilon;
    return v.color() < n && v.subset_size() == k && v.max_index() <= n;
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

class Ideal {
 public:
  explicit Ideal(Ambient ambient) : ambient_(ambient) {}
  Ideal(Ambient ambient, const std::vector<Polynomial>& generators) : ambient_(ambient) {
    for (const Polynomial& g : generators) add_generator(g);
  }

  const Ambient& ambient() const noexcept { return ambient_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  // Zero polynomials are dropped; a variable outside the ambient ring throws.
  void add_generator(const Polynomial& g) {
    if (g.is_zero()) return;
    for (const Variable& v : g.variables())
      if (!ambient_.owns(v)) throw InvalidInput("generator uses a variable outside the ambient ring");
    generators_.push_back(g);
    cache_.reset();
  }

  const GroebnerBasis& groebner_basis(MonomialOrder order = MonomialOrder::kBlockGrevlex,
                                      const GroebnerLimits& limits = {}) const {
    if (!cache_ || cache_->order() != order) cache_ = buchberger(generators_, order, limits);
    return *cache_;
  }

  // Replaces epsilon by `value`; vanished generators are dropped.
  Ideal specialize(const Rational& value) const {
    Ambient target = ambient_;
    target.with_epsilon = false;
    Ideal out(target);
    for (const Polynomial& g : generators_) out.add_generator(g.substitute_epsilon(value));
    return out;
  }

  int krull_dimension(MonomialOrder order = MonomialOrder::kBlockGrevlex,
                      const GroebnerLimits& limits = {}) const {
    return positroid::krull_dimension(groebner_basis(order, limits), ambient_.variables());
  }

  bool contains(const Polynomial& p) const { return normal_form(p, groebner_basis()).is_zero(); }

 private:
  Ambient ambient_;
  std::vector<Polynomial> generators_;
  mutable std::optional<GroebnerBasis> cache_;
};

// I : B^infinity for the irrelevant ideal B = prod_b (D^(b)_I)_I of the
// product of projective spaces, computed as successive colons by one linear
// form l_b = sum_t (t + 1) D^(b)_{I_t} per color: I : l_b^infinity is the
// epsilon-free part of a basis of I + (1 - e l_b) under epsilon elimination.
// Exact as long as no associated prime away from B contains some l_b, which
// holds for primes whose zero set meets a coordinate point, since l_b is
// nonzero on every coordinate vector.
inline Ideal saturate_irrelevant(const Ideal& ideal, const GroebnerLimits& limits = {}) {
  const Ambient& ambient = ideal.ambient();
  if (ambient.with_epsilon) throw InvalidInput("saturate_irrelevant: specialize epsilon first");
  const auto subsets = all_ksubsets(ambient.n, ambient.k);
  std::vector<Polynomial> current = ideal.generators();
  for (int b = 0; b < ambient.n; ++b) {
    Polynomial form;
    for (std::size_t t = 0; t < subsets.size(); ++t)
      form += plucker_var(b, subsets[t]) * Rational(static_cast<long>(t + 1));
    std::vector<Polynomial> gens = current;
    gens.push_back(Polynomial(1) - Polynomial::epsilon() * form);
    GroebnerBasis basis = buchberger(gens, MonomialOrder::kEliminateEpsilon, limits);
    current.clear();
    for (const Polynomial& g : basis.elements())
      if (!g.contains_epsilon()) current.push_back(g);
  }
  return Ideal(ambient, current);
}

}  // namespace positroid
