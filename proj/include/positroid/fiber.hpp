#pragma once

// Points of the fibers of the global family: tuples (U_0, ..., U_{n-1}) of
// k-dimensional subspaces of Q^n with M(e) U_b contained in U_{b+1}, where
// M(e): w_i -> w_{i-1} (i > 1), w_1 -> e w_n. Subspaces are stored as k x n
// matrices whose rows span them; column i-1 holds the w_i coordinate.

#include <map>
#include <string>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/linalg.hpp"
#include "positroid/pattern.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

class Subspace {
 public:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() <= 0 || basis_.cols() <= basis_.rows())
      throw InvalidInput("subspace: need 0 < k < n");
    if (rank(basis_) != basis_.rows()) throw InvalidInput("subspace: basis is rank deficient");
  }

  // span{w_i : i in indices}
  static Subspace coordinate(int n, std::span<const int> indices) {
    Matrix m(static_cast<int>(indices.size()), n);
    for (std::size_t r = 0; r < indices.size(); ++r) m(static_cast<int>(r), indices[r] - 1) = 1;
    return Subspace(std::move(m));
  }

  int k() const noexcept { return basis_.rows(); }
  int n() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  Matrix basis_;
};

struct FiberPoint {
  Rational epsilon;
  std::vector<Subspace> spaces;
};

// Matrix of M(e) acting on row vectors: (x M)_{i-1} = x_i, (x M)_n = e x_1.
inline Matrix quiver_map(int n, const Rational& epsilon) {
  Matrix m(n, n);
  for (int i = 2; i <= n; ++i) m(i - 1, i - 2) = 1;
  m(0, n - 1) = epsilon;
  return m;
}

// M_{b -> b+steps}(e): all arrows carry the same map.
inline Matrix quiver_path_map(int n, const Rational& epsilon, int steps) {
  Matrix out = Matrix::identity(n);
  Matrix step = quiver_map(n, epsilon);
  for (int s = 0; s < steps; ++s) out = out * step;
  return out;
}

// Cyclic shift phi = M(1).
inline Matrix phi(int n) { return quiver_map(n, 1); }

// Rows of `vectors` mapped by `map` (row-vector convention).
inline Matrix apply_map(const Matrix& vectors, const Matrix& map) { return vectors * map; }

inline bool contains_rows(const Subspace& target, const Matrix& vectors) {
  return rank(target.basis().stacked(vectors)) == target.k();
}

inline bool is_subrepresentation(const FiberPoint& point) {
  const int count = static_cast<int>(point.spaces.size());
  if (count == 0) return false;
  const int n = point.spaces.front().n();
  if (count != n) throw InvalidInput("fiber point must have n spaces");
  Matrix map = quiver_map(n, point.epsilon);
  for (int b = 0; b < n; ++b) {
    if (point.spaces[b].n() != n || point.spaces[b].k() != point.spaces.front().k())
      throw InvalidInput("fiber point spaces have inconsistent shapes");
    if (!contains_rows(point.spaces[(b + 1) % n], apply_map(point.spaces[b].basis(), map))) return false;
  }
  return true;
}

// All maximal minors, keyed by sorted column subset.
inline std::map<KSubset, Rational> plucker_vector(const Subspace& space) {
  std::map<KSubset, Rational> out;
  for (const KSubset& I : all_ksubsets(space.n(), space.k())) {
    std::vector<int> cols;
    for (int i : I.elements()) cols.push_back(i - 1);
    out.emplace(I, determinant(space.basis().columns(cols)));
  }
  return out;
}

// U in X^-_{J_b}: D_I(U) = 0 whenever not (J_b <= I).
inline bool in_opposite_schubert(const Subspace& space, const KSubset& entry) {
  for (const auto& [I, value] : plucker_vector(space))
    if (!subset_leq(entry, I) && value != 0) return false;
  return true;
}

// U in Pi_J (closed): phi^b(U) in X^-_{J_b} for every b.
inline bool in_classical_positroid(const Subspace& space, const JugglingPattern& pattern) {
  if (space.n() != pattern.n() || space.k() != pattern.k()) throw InvalidInput("shape mismatch");
  Matrix current = space.basis();
  const Matrix shift = phi(pattern.n());
  for (int b = 0; b < pattern.n(); ++b) {
    if (!in_opposite_schubert(Subspace(current), pattern[b])) return false;
    current = apply_map(current, shift);
  }
  return true;
}

inline bool in_positroid_fiber(const FiberPoint& point, const JugglingPattern& pattern) {
  if (static_cast<int>(point.spaces.size()) != pattern.n()) throw InvalidInput("shape mismatch");
  if (!is_subrepresentation(point)) return false;
  for (int b = 0; b < pattern.n(); ++b)
    if (!in_opposite_schubert(point.spaces[b], pattern[b])) return false;
  return true;
}

// (span{w_i : i in J'_b})_b for any juggling pattern J'. At e = 0 this is
// always a point of the juggling variety.
inline FiberPoint coordinate_point(const JugglingPattern& pattern, const Rational& epsilon) {
  FiberPoint point{epsilon, {}};
  for (int b = 0; b < pattern.n(); ++b) point.spaces.push_back(Subspace::coordinate(pattern.n(), pattern[b].elements()));
  return point;
}

// p(S)_b = span{w_i : i in J(S)_b}; the same tuple for every e.
inline FiberPoint torus_fixed_point(const AnchorSet& anchor, const Rational& epsilon) {
  return coordinate_point(pattern_from_anchor(anchor), epsilon);
}

// k = 1 points: v_0 = sum_{l in L(J)} lambda_l w_{l+1}, v_b = M_{0->b}(e) v_0.
// Each v_b is computed as a vector of polynomials in e and divided by the
// largest power of e dividing all its coordinates before e is substituted, so
// at e = 0 every vertex keeps its limiting line.
inline FiberPoint k1_point(const JugglingPattern& pattern, const std::vector<Rational>& lambda,
                           const Rational& epsilon) {
  if (pattern.k() != 1) throw InvalidInput("k1_point requires k = 1");
  const int n = pattern.n();
  const std::vector<int> ones = pattern.ones_locus();
  if (lambda.size() != ones.size())
    throw InvalidInput("k1_point: need one lambda per element of L(J)");
  // coords[i][p]: coefficient of e^p in the w_{i+1} coordinate.
  std::vector<std::vector<Rational>> coords(n, std::vector<Rational>(1));
  for (std::size_t t = 0; t < ones.size(); ++t) coords[ones[t]][0] = lambda[t];

  FiberPoint point{epsilon, {}};
  for (int b = 0; b < n; ++b) {
    if (b > 0) {
      std::vector<std::vector<Rational>> next(n);
      for (int i = 1; i < n; ++i) next[i - 1] = coords[i];
      next[n - 1] = coords[0];
      next[n - 1].insert(next[n - 1].begin(), Rational(0));
      coords = std::move(next);
    }
    std::size_t low = SIZE_MAX;
    for (const auto& c : coords)
      for (std::size_t p = 0; p < c.size(); ++p)
        if (c[p] != 0) {
          low = std::min(low, p);
          break;
        }
    if (low == SIZE_MAX) throw InvalidInput("k1_point: zero vector at vertex " + std::to_string(b));
    Matrix row(1, n);
    for (int i = 0; i < n; ++i) {
      Rational value = 0, power = 1;
      for (std::size_t p = low; p < coords[i].size(); ++p) {
        value += coords[i][p] * power;
        power *= epsilon;
      }
      row(0, i) = value;
    }
    point.spaces.emplace_back(std::move(row));
  }
  return point;
}

// Per vertex: U_b in Pi_{rot^b J}.
inline std::vector<bool> project_and_check(const FiberPoint& point, const JugglingPattern& pattern) {
  std::vector<bool> out;
  for (int b = 0; b < pattern.n(); ++b)
    out.push_back(in_classical_positroid(point.spaces[b], rotate(pattern, b)));
  return out;
}

// Evaluates a polynomial in e and D^(a)_I on the Pluecker vectors of a point.
inline Rational evaluate_on_point(const Polynomial& p, const FiberPoint& point) {
  std::vector<std::map<KSubset, Rational>> vectors;
  for (const Subspace& s : point.spaces) vectors.push_back(plucker_vector(s));
  const int n = static_cast<int>(point.spaces.size());
  return p.evaluate([&](const Variable& v) -> Rational {
    if (v.is_epsilon()) return point.epsilon;
    if (v.color() >= n) throw InvalidInput("variable color outside the point");
    const int ambient = point.spaces[v.color()].n();
    if (v.max_index() > ambient) throw InvalidInput("variable index outside the subspace");
    auto it = vectors[v.color()].find(KSubset::from_mask(ambient, v.mask()));
    if (it == vectors[v.color()].end()) throw InvalidInput("variable does not match subspace size");
    return it->second;
  });
}

}  // namespace positroid
