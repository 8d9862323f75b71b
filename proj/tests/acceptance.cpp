// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero if any criterion fails or runs over its limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "positroid/positroid.hpp"

using namespace positroid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> findings;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<JugglingPattern> k1_patterns(int max_n) {
  std::vector<JugglingPattern> out;
  for (int n = 2; n <= max_n; ++n)
    for (const auto& p : enumerate_patterns(1, n)) out.push_back(p);
  return out;
}

int total(const MultiDegree& m) {
  int t = 0;
  for (int d : m) t += d;
  return t;
}

std::uint64_t choose(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

bool all_true(const std::vector<bool>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](bool x) { return x; });
}

// 1. |patterns(1, n)| = 2^n - 1 for n = 2..10.
Outcome pattern_counts() {
  Outcome out;
  for (int n = 2; n <= 10; ++n) {
    auto count = enumerate_patterns(1, n, EnumerationLimits{10}).size();
    out.require(count == (std::size_t{1} << n) - 1, "n = " + std::to_string(n) + ": " + std::to_string(count));
  }
  out.detail = out.pass ? "n = 2..10" : out.detail;
  return out;
}

// 2. count_admissible = C(|m| + ell - 1, |m|) for n <= 5, |m| <= 4.
Outcome counting_identity() {
  Outcome out;
  std::size_t cases = 0;
  for (const auto& j : k1_patterns(5))
    for (const auto& m : multidegrees_up_to(j.n(), 4)) {
      ++cases;
      out.require(count_admissible(j, m) == choose(total(m) + j.ell() - 1, total(m)),
                  j.to_string() + " m=" + detail::multidegree_key(m));
    }
  if (out.pass) out.detail = std::to_string(cases) + " (pattern, multidegree) cases";
  return out;
}

// 3a. k = 1, n <= 4, |m| <= 3: dimensions constant across e and equal to the count.
Outcome flatness_k1() {
  Outcome out;
  SweepOptions options;
  options.max_degree = 3;
  options.epsilons = {0, 1, 2, -1};
  std::size_t cases = 0;
  for (int n = 2; n <= 4; ++n) {
    auto report = cmd_flatness(enumerate_patterns(1, n), options);
    cases += report.cases.size();
    for (const auto& entry : report.cases)
      out.require(entry["pass"] == true, entry.dump());
  }
  if (out.pass)
    out.detail = std::to_string(cases) +
                 " cases; generated dims constant in e, saturated dims = admissible count";
  return out;
}

// Coordinate tuples (span of coordinate vectors at every vertex) on which all
// e = 0 generators vanish, split by whether they are M(0)-stable.
std::pair<std::size_t, std::size_t> coordinate_zero_set(const JugglingPattern& pattern) {
  const int n = pattern.n(), k = pattern.k();
  const Ideal fiber = specialize(global_positroid_ideal(pattern), 0);
  const auto subsets = all_ksubsets(n, k);
  std::size_t zeros = 0, unstable = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    FiberPoint point{0, {}};
    for (int b = 0; b < n; ++b) point.spaces.push_back(Subspace::coordinate(n, subsets[idx[b]].elements()));
    bool vanish = true;
    for (const auto& g : fiber.generators())
      if (evaluate_on_point(g, point) != 0) {
        vanish = false;
        break;
      }
    if (vanish) {
      ++zeros;
      if (!is_subrepresentation(point)) ++unstable;
    }
    int b = n - 1;
    while (b >= 0 && ++idx[b] == subsets.size()) idx[b--] = 0;
    if (b < 0) break;
  }
  return {zeros, unstable};
}

// 3b. k = 2, n = 4: constant pattern and three non-constant ones, |m| <= 2,
// generated dimensions equal for e in {0, 1}. Saturated dimensions and the
// coordinate zero set are reported as findings.
Outcome flatness_k2() {
  Outcome out;
  std::vector<JugglingPattern> patterns{constant_pattern(2, 4)};
  for (const auto& p : enumerate_patterns(2, 4))
    if (!p.is_constant_minimal() && patterns.size() < 4) patterns.push_back(p);
  SweepOptions options;
  options.max_degree = 2;
  options.epsilons = {0, 1};
  std::size_t cases = 0;
  std::string names;
  for (const auto& p : patterns) {
    auto report = cmd_flatness({p}, options);
    cases += report.cases.size();
    names += (names.empty() ? "" : " ") + p.to_string();
    for (const auto& entry : report.cases) out.require(entry["pass"] == true, entry.dump());
  }
  if (out.pass) out.detail = std::to_string(cases) + " cases over " + names;

  SweepOptions saturated = options;
  saturated.saturate = true;
  auto constant = cmd_flatness({patterns.front()}, saturated);
  for (const auto& entry : constant.cases) {
    const auto& dims = entry["saturated_dimensions"];
    if (dims[0] != dims[1])
      out.findings.push_back("k=2 constant pattern, degree (" +
                             detail::multidegree_key(entry["multidegree"].get<MultiDegree>()) +
                             "): saturated dims " + dims.dump() + " at e = [0, 1]");
  }
  if (out.findings.empty())
    out.findings.push_back("k=2 constant pattern: saturated dims agree for e in {0, 1}, |m| <= 2");
  auto [zeros, unstable] = coordinate_zero_set(patterns.front());
  out.findings.push_back("k=2 constant pattern, e = 0: " + std::to_string(unstable) + " of " +
                         std::to_string(zeros) + " coordinate zeros of the generators are not M(0)-stable");
  return out;
}

// 4. Component counts.
Outcome component_counts() {
  Outcome out;
  for (const auto& j : k1_patterns(6))
    out.require(components_of_special_fiber(j).size() == static_cast<std::size_t>(j.ell()), j.to_string());
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      out.require(components_of_special_fiber(constant_pattern(k, n)).size() == choose(n, k),
                  "constant (" + std::to_string(k) + "," + std::to_string(n) + ")");
  if (out.pass) out.detail = "k=1 n<=6 and constant patterns n<=6";
  return out;
}

// 5. Projective dimension at e = 1 and e = 0 equals ell - 1 (k = 1, n <= 4).
Outcome dimension_equality() {
  Outcome out;
  std::size_t count = 0;
  for (const auto& j : k1_patterns(4)) {
    int one = cmd_dimension(j, 1), zero = cmd_dimension(j, 0);
    ++count;
    out.require(one == zero && one == j.ell() - 1,
                j.to_string() + ": " + std::to_string(one) + " vs " + std::to_string(zero));
  }
  if (out.pass) out.detail = std::to_string(count) + " patterns";
  return out;
}

// 6. p(S) lies in every fiber of J <= J(S).
Outcome fixed_point_membership() {
  Outcome out;
  std::size_t checks = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const auto patterns = enumerate_patterns(k, n);
      for (const AnchorSet& s : all_anchor_sets(n, k)) {
        const JugglingPattern anchor = pattern_from_anchor(s);
        for (Rational eps : {Rational(0), Rational(1), Rational(-1), Rational(2)}) {
          const FiberPoint point = torus_fixed_point(s, eps);
          for (const auto& j : patterns)
            if (pattern_leq(j, anchor)) {
              ++checks;
              out.require(in_positroid_fiber(point, j), j.to_string());
            }
        }
      }
    }
  if (out.pass) out.detail = std::to_string(checks) + " memberships";
  return out;
}

// 7. Projections of e = 0 points land in the classical positroid varieties.
Outcome projection_structure() {
  Outcome out;
  std::size_t points = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= std::min(2, n - 1); ++k)
      for (const auto& j : enumerate_patterns(k, n)) {
        for (const AnchorSet& s : components_of_special_fiber(j)) {
          ++points;
          out.require(all_true(project_and_check(torus_fixed_point(s, 0), j)), j.to_string());
        }
        if (k == 1)
          for (const auto& lambda : sample_lambdas(j.ell(), {2, 3, 5, 7, 11}, 1)) {
            const FiberPoint point = k1_point(j, lambda, 0);
            ++points;
            out.require(in_positroid_fiber(point, j) && all_true(project_and_check(point, j)), j.to_string());
          }
      }
  if (out.pass) out.detail = std::to_string(points) + " points";
  return out;
}

// 8. Rewriting terminates in admissible form with the evaluation identity.
Outcome rewriting_soundness() {
  Outcome out;
  std::size_t monomials = 0;
  for (int n = 2; n <= 4; ++n) {
    const JugglingPattern full = constant_pattern(1, n);
    std::vector<FiberPoint> points;
    for (const auto& lambda : sample_lambdas(n, {2, 3, 5, 7, 11}, 1)) points.push_back(k1_point(full, lambda, 1));
    const auto subsets = all_ksubsets(n, 1);
    for (const auto& m : multidegrees_up_to(n, 4)) {
      // Every monomial of multidegree m: one weakly increasing list per vertex.
      std::vector<std::vector<int>> lists(n);
      std::function<void(int)> fill = [&](int b) {
        if (b == n) {
          ColoredMonomial mon(n, lists);
          NormalForm nf = rewrite_to_normal_form(mon);
          ++monomials;
          bool ok = nf.epsilon_power >= 0 && is_admissible(nf.monomial, full);
          Integer previous = mon.index_product();
          for (const auto& step : nf.steps) {
            ok = ok && step.measure < previous;
            previous = step.measure;
          }
          for (const auto& p : points) ok = ok && evaluate_monomial(mon, p) == evaluate_monomial(nf.monomial, p);
          out.require(ok, mon.to_string());
          return;
        }
        std::function<void(int, int)> pick = [&](int left, int low) {
          if (left == 0) {
            fill(b + 1);
            return;
          }
          for (int i = low; i <= n; ++i) {
            lists[b].push_back(i);
            pick(left - 1, i);
            lists[b].pop_back();
          }
        };
        pick(m[b], 1);
      };
      fill(0);
    }
  }
  if (out.pass) out.detail = std::to_string(monomials) + " monomials, 5 points at e = 1";
  return out;
}

// 9. Classical Pluecker relations vanish on random exact matrices.
Outcome classical_identity() {
  Outcome out;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const auto gens = classical_plucker_generators(k, n, 0);
    int made = 0;
    while (made < 100) {
      Matrix m(k, n);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) {
          Rational x(num(rng), den(rng));
          x.canonicalize();
          m(i, j) = x;
        }
      if (rank(m) < k) continue;
      ++made;
      const Subspace u(m);
      const FiberPoint point{1, {u}};
      for (const auto& g : gens) out.require(evaluate_on_point(g, point) == 0, format_polynomial(g));
    }
  }
  if (out.pass) out.detail = "100 matrices each for (2,4), (2,5), (3,6)";
  return out;
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 pattern counts", 1, pattern_counts},
      {"2 admissible counting identity", 10, counting_identity},
      {"3a flatness k=1", 120, flatness_k1},
      {"3b flatness k=2 n=4", 600, flatness_k2},
      {"4 component counts", 5, component_counts},
      {"5 dimension equality", 300, dimension_equality},
      {"6 fixed-point membership", 60, fixed_point_membership},
      {"7 projection structure", 120, projection_structure},
      {"8 rewriting soundness", 60, rewriting_soundness},
      {"9 classical Pluecker identity", 30, classical_identity},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const Error& e) {
      outcome.pass = false;
      outcome.detail = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    std::printf("%s criterion %s: %.2fs (limit %.0fs)%s; %s\n", pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                c.limit_seconds, in_time ? "" : " over time", outcome.detail.c_str());
    for (const auto& f : outcome.findings) std::printf("  finding: %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
