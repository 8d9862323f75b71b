#pragma once

// Exact-rational polynomials in the parameter e (epsilon) and colored Pluecker
// variables D^(a)_I.
//
// Variables are ordered: Pluecker variables first, by color and then by the
// lexicographic order of the subset; epsilon last. Monomials store their
// nonzero exponents sorted by that order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/pattern.hpp"
#include "positroid/rational.hpp"

namespace positroid {

class Variable {
 public:
  static Variable epsilon() { return Variable(); }
  static Variable plucker(int color, const KSubset& subset) {
    if (color < 0) throw InvalidInput("negative color");
    return Variable(color, subset.mask());
  }
  static Variable plucker(int color, std::uint32_t mask) { return Variable(color, mask); }

  bool is_epsilon() const noexcept { return color_ < 0; }
  int color() const noexcept { return color_; }
  std::uint32_t mask() const noexcept { return mask_; }
  int subset_size() const noexcept { return __builtin_popcount(mask_); }
  int max_index() const noexcept { return mask_ == 0 ? 0 : 32 - __builtin_clz(mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
      if (mask_ & (1u << (i - 1))) out.push_back(i);
    return out;
  }

  friend bool operator==(const Variable&, const Variable&) = default;

  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (a.is_epsilon() || b.is_epsilon()) return a.is_epsilon() <=> b.is_epsilon();
    if (auto c = a.color_ <=> b.color_; c != 0) return c;
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    if (int ca = __builtin_popcount(a.mask_), cb = __builtin_popcount(b.mask_); ca != cb) return ca <=> cb;
    // Same size: the set holding the smallest element of the symmetric
    // difference is lexicographically smaller.
    std::uint32_t diff = a.mask_ ^ b.mask_;
    std::uint32_t low = diff & (~diff + 1);
    return (a.mask_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Variable() = default;
  Variable(int color, std::uint32_t mask) : color_(color), mask_(mask) {}

  int color_ = -1;
  std::uint32_t mask_ = 0;
};

using MultiDegree = std::vector<int>;

class Monomial {
 public:
  using Factor = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned exponent = 1) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
  }
  // Accepts factors in any order; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v)
        m.factors_.back().second += e;
      else
        m.factors_.emplace_back(v, e);
    }
    return m;
  }

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  unsigned exponent(Variable v) const {
    for (const auto& [w, e] : factors_)
      if (w == v) return e;
    return 0;
  }
  unsigned epsilon_exponent() const {
    return !factors_.empty() && factors_.back().first.is_epsilon() ? factors_.back().second : 0;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }
  unsigned plucker_degree() const { return degree() - epsilon_exponent(); }

  // Number of Pluecker factors of each color (epsilon contributes nothing).
  MultiDegree multidegree(int n) const {
    MultiDegree m(n, 0);
    for (const auto& [v, e] : factors_) {
      if (v.is_epsilon()) continue;
      if (v.color() >= n) throw InvalidInput("color outside Z_n");
      m[v.color()] += static_cast<int>(e);
    }
    return m;
  }

  Monomial without_epsilon() const {
    Monomial m = *this;
    if (!m.factors_.empty() && m.factors_.back().first.is_epsilon()) m.factors_.pop_back();
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i, ++j;
      }
    }
    return out;
  }

  bool divides(const Monomial& other) const {
    auto j = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (j != other.factors_.end() && j->first < v) ++j;
      if (j == other.factors_.end() || !(j->first == v) || j->second < e) return false;
    }
    return true;
  }

  // other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    std::vector<Factor> out;
    auto i = factors_.begin();
    for (const auto& [v, e] : other.factors_) {
      unsigned sub = 0;
      if (i != factors_.end() && i->first == v) sub = (i++)->second;
      if (e > sub) out.emplace_back(v, e - sub);
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, std::max(i->second, j->second));
        ++i, ++j;
      }
    }
    return out;
  }

  bool coprime(const Monomial& other) const {
    auto j = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (j != other.factors_.end() && j->first < v) ++j;
      if (j != other.factors_.end() && j->first == v) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Structural order used for canonical storage; not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
        [](const Factor& x, const Factor& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

 private:
  std::vector<Factor> factors_;
};

// Upper bound on the number of terms any polynomial may carry; 0 = unlimited.
// The CLI wires POSITROID_MAX_TERMS into this.
inline std::size_t& max_polynomial_terms() {
  static std::size_t limit = 0;
  return limit;
}

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Monomial(), constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(const Monomial& m, const Rational& coeff = 1) {
    if (coeff != 0) terms_.emplace(m, coeff);
  }
  explicit Polynomial(Variable v) : Polynomial(Monomial(v)) {}

  static Polynomial epsilon() { return Polynomial(Variable::epsilon()); }

  // D^(color)_{indices} for an arbitrary index tuple: sorted with the sign of
  // the sorting permutation; zero if an index repeats.
  static Polynomial plucker(int color, std::span<const int> indices, int n) {
    std::vector<int> sorted(indices.begin(), indices.end());
    int inversions = 0;
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b) {
        if (sorted[a] == sorted[b]) return Polynomial();
        if (sorted[a] > sorted[b]) ++inversions;
      }
    std::sort(sorted.begin(), sorted.end());
    Variable v = Variable::plucker(color, KSubset(n, std::move(sorted)));
    return Polynomial(Monomial(v), inversions % 2 == 0 ? 1 : -1);
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Adds coeff * m in place.
  void add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    check_size();
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Polynomial times(const Monomial& m, const Rational& coeff = 1) const {
    Polynomial out;
    if (coeff == 0) return out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c * coeff);
    out.check_size();
    return out;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial out(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  // Replaces epsilon by a constant.
  Polynomial substitute_epsilon(const Rational& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      unsigned e = m.epsilon_exponent();
      if (e == 0) {
        out.add_term(m, c);
        continue;
      }
      Rational factor = 1;
      for (unsigned i = 0; i < e; ++i) factor *= value;
      out.add_term(m.without_epsilon(), c * factor);
    }
    return out;
  }

  bool contains_epsilon() const {
    for (const auto& [m, c] : terms_)
      if (m.epsilon_exponent() > 0) return true;
    return false;
  }

  Rational evaluate(const std::function<Rational(const Variable&)>& value_of) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (const auto& [v, e] : m.factors()) {
        Rational x = value_of(v);
        for (unsigned i = 0; i < e; ++i) term *= x;
        if (term == 0) break;
      }
      total += term;
    }
    return total;
  }

  // Scales so the coefficients are coprime integers and the structurally first
  // term is positive. Used for deduplication and to curb coefficient growth.
  Polynomial primitive() const {
    if (is_zero()) return *this;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.begin()->second < 0) scale = -scale;
    Polynomial out = *this;
    out *= scale;
    return out;
  }

  // Multidegree if every term has the same one, else empty.
  std::optional<MultiDegree> homogeneous_multidegree(int n) const {
    std::optional<MultiDegree> degree;
    for (const auto& [m, c] : terms_) {
      MultiDegree d = m.multidegree(n);
      if (!degree) {
        degree = std::move(d);
      } else if (*degree != d) {
        return std::nullopt;
      }
    }
    return degree;
  }

  std::vector<Variable> variables() const {
    std::vector<Variable> out;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors()) out.push_back(f.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

 private:
  void check_size() const {
    std::size_t limit = max_polynomial_terms();
    if (limit != 0 && terms_.size() > limit)
      throw ResourceLimit("polynomial exceeds " + std::to_string(limit) + " terms");
  }

  TermMap terms_;
};

inline Polynomial plucker_var(int color, const KSubset& subset) {
  return Polynomial(Variable::plucker(color, subset));
}

// Every Pluecker variable of the ring over (k, n), colors 0..n-1.
inline std::vector<Variable> plucker_variables(int k, int n) {
  std::vector<Variable> out;
  const auto subsets = all_ksubsets(n, k);
  for (int a = 0; a < n; ++a)
    for (const KSubset& s : subsets) out.push_back(Variable::plucker(a, s));
  return out;
}

}  // namespace positroid
