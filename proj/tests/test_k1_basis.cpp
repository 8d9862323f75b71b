#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "positroid/positroid.hpp"

using namespace positroid;

namespace {

JugglingPattern k1(std::vector<int> values) {
  std::vector<std::vector<int>> entries;
  for (int v : values) entries.push_back({v});
  return validate_pattern(1, static_cast<int>(values.size()), entries);
}

// Weakly increasing lists of length d over [n].
std::vector<std::vector<int>> multisets(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i <= n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<ColoredMonomial> all_monomials(int n, const MultiDegree& m) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int d : m) choices.push_back(multisets(n, d));
  std::vector<ColoredMonomial> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::vector<int>> lists;
    for (int b = 0; b < n; ++b) lists.push_back(choices[b][idx[b]]);
    out.emplace_back(n, lists);
    int b = n - 1;
    while (b >= 0 && ++idx[b] == choices[b].size()) idx[b--] = 0;
    if (b < 0) break;
  }
  return out;
}

// Conditions (1) and (2) of admissibility, straight from the definition.
bool admissible_oracle(const ColoredMonomial& mon, const JugglingPattern& j) {
  const int n = mon.n();
  const auto ones = j.ones_locus();
  for (int b = 0; b < n; ++b)
    for (int i : mon.at(b))
      if (std::find(ones.begin(), ones.end(), (b + i - 1) % n) == ones.end()) return false;
  for (int b = 0; b < n; ++b)
    for (int s = 1; s < n; ++s)
      for (int i : mon.at(b))
        if (i > s)
          for (int r : mon.at(b + s))
            if (r > i - s) return false;
  return true;
}

}  // namespace

TEST_CASE("admissibility examples", "[k1]") {
  const auto full = k1({1, 1, 1});
  CHECK(is_admissible(ColoredMonomial(3, {{2}, {1}, {}}), full));
  CHECK_FALSE(is_admissible(ColoredMonomial(3, {{2}, {2}, {}}), full));
  CHECK_FALSE(is_admissible(ColoredMonomial(3, {{}, {3}, {}}), k1({3, 2, 1})));
  CHECK_THROWS_AS(is_admissible(ColoredMonomial(4, {{}, {}, {}, {}}), constant_pattern(2, 4)), InvalidInput);
  CHECK_THROWS_AS(ColoredMonomial(3, {{4}, {}, {}}), InvalidInput);
}

TEST_CASE("enumeration examples", "[k1]") {
  auto list = enumerate_admissible(k1({1, 1, 1}), {1, 1, 0});
  std::vector<std::pair<int, int>> pairs;
  for (const auto& mon : list) pairs.emplace_back(mon.at(0)[0], mon.at(1)[0]);
  std::sort(pairs.begin(), pairs.end());
  CHECK(pairs == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 2}});

  auto point = enumerate_admissible(k1({3, 2, 1}), {1, 1, 1});
  REQUIRE(point.size() == 1);
  CHECK(point.front().to_string() == "D0_3*D1_2*D2_1");
  for (const auto& j : enumerate_patterns(1, 4)) {
    auto empty = enumerate_admissible(j, {0, 0, 0, 0});
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().to_string() == "1");
  }
}

TEST_CASE("enumeration matches the definition", "[k1][property]") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& j : enumerate_patterns(1, n))
      for (const auto& m : multidegrees_up_to(n, n == 4 ? 2 : 3)) {
        std::vector<ColoredMonomial> expected;
        for (const auto& mon : all_monomials(n, m))
          if (admissible_oracle(mon, j)) expected.push_back(mon);
        auto got = enumerate_admissible(j, m);
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
        for (const auto& mon : got) CHECK(is_admissible(mon, j));
      }
}

TEST_CASE("counting identity", "[k1][property]") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& j : enumerate_patterns(1, n))
      for (const auto& m : multidegrees_up_to(n, n == 5 ? 3 : 4)) {
        int total = 0;
        for (int d : m) total += d;
        CHECK(count_admissible(j, m) == oracle::choose(total + j.ell() - 1, total));
        CHECK(expected_admissible_count(j, m) == oracle::choose(total + j.ell() - 1, total));
      }
}

TEST_CASE("rewriting examples", "[k1]") {
  auto a = rewrite_to_normal_form(ColoredMonomial(3, {{2}, {2}, {}}));
  CHECK(a.epsilon_power == 0);
  CHECK(a.monomial.to_string() == "D0_3*D1_1");
  auto b = rewrite_to_normal_form(ColoredMonomial(3, {{3}, {3}, {}}));
  CHECK(b.epsilon_power == 1);
  CHECK(b.monomial.to_string() == "D0_1*D1_2");
  ColoredMonomial adm(3, {{1}, {3}, {}});
  auto c = rewrite_to_normal_form(adm);
  CHECK(c.epsilon_power == 0);
  CHECK(c.monomial == adm);
  CHECK(c.steps.empty());
  CHECK_THROWS_AS(rewrite_to_normal_form(ColoredMonomial(3, {{}, {3}, {}}), k1({3, 2, 1})), ZeroInQuotient);
}

TEST_CASE("rewriting terminates and is sound", "[k1][property]") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    const auto full = constant_pattern(1, n);
    const Ideal global = global_positroid_ideal(full);
    std::vector<FiberPoint> points;
    std::uniform_int_distribution<int> dist(1, 60);
    for (Rational e : {Rational(0), Rational(1), Rational(3), Rational(-1, 2)})
      for (int t = 0; t < 3; ++t) {
        std::vector<Rational> lambda;
        for (int l = 0; l < n; ++l) lambda.emplace_back(dist(rng));
        points.push_back(k1_point(full, lambda, e));
      }
    for (const auto& m : multidegrees_up_to(n, n == 4 ? 3 : 4))
      for (const auto& mon : all_monomials(n, m)) {
        NormalForm nf = rewrite_to_normal_form(mon);
        CHECK(nf.epsilon_power >= 0);
        CHECK(is_admissible(nf.monomial, full));
        CHECK(nf.monomial.multidegree() == m);
        Integer previous = mon.index_product();
        for (const RewriteStep& step : nf.steps) {
          CHECK(step.measure < previous);
          previous = step.measure;
        }
        int wraps = 0;
        for (const RewriteStep& step : nf.steps) wraps += step.wrapped;
        CHECK(wraps == nf.epsilon_power);
        for (const FiberPoint& p : points) {
          Rational scale = 1;
          for (int t = 0; t < nf.epsilon_power; ++t) scale *= p.epsilon;
          CHECK(evaluate_monomial(mon, p) == scale * evaluate_monomial(nf.monomial, p));
        }
      }
    // The difference input - e^power * output lies in the ideal (n = 2, 3).
    if (n <= 3) {
      for (const auto& m : multidegrees_up_to(n, 2, false))
        for (const auto& mon : all_monomials(n, m)) {
          NormalForm nf = rewrite_to_normal_form(mon);
          Polynomial diff = mon.to_polynomial() - Polynomial::epsilon().pow(nf.epsilon_power) * nf.monomial.to_polynomial();
          CHECK(global.contains(diff));
        }
    }
  }
}

TEST_CASE("rewriting for non-constant patterns", "[k1][property]") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& j : enumerate_patterns(1, n))
      for (const auto& m : multidegrees_up_to(n, 3))
        for (const auto& mon : all_monomials(n, m)) {
          bool nonzero = true;
          const auto ones = j.ones_locus();
          for (int b = 0; b < n; ++b)
            for (int i : mon.at(b))
              nonzero = nonzero && std::find(ones.begin(), ones.end(), (b + i - 1) % n) != ones.end();
          if (!nonzero) {
            CHECK_THROWS_AS(rewrite_to_normal_form(mon, j), ZeroInQuotient);
            continue;
          }
          CHECK(is_admissible(rewrite_to_normal_form(mon, j).monomial, j));
        }
}

TEST_CASE("monomial evaluation matches point evaluation", "[k1]") {
  const auto j = k1({1, 2, 1, 1});
  auto point = k1_point(j, {2, 3, 5}, Rational(7, 3));
  for (const auto& mon : enumerate_admissible(j, {1, 0, 2, 1}))
    CHECK(evaluate_monomial(mon, point) == evaluate_on_point(mon.to_polynomial(), point));
}

TEST_CASE("sampled lambdas are deterministic", "[k1]") {
  auto a = sample_lambdas(3, {2, 3}, 4), b = sample_lambdas(3, {2, 3}, 4);
  CHECK(a == b);
  CHECK(a.size() == 8);
  for (const auto& l : a)
    for (const auto& x : l) CHECK((x >= 1 && x <= 97));
}

TEST_CASE("basis verification examples", "[k1]") {
  const std::vector<Rational> eps{0, 1, 2, -1};
  const std::vector<std::uint32_t> seeds{2, 3, 5, 7, 11};
  auto full = verify_basis(k1({1, 1, 1}), {1, 1, 0}, eps, seeds);
  CHECK(full.count == 6);
  CHECK(full.evaluation_rank == 6);
  for (const auto& d : full.dimensions) CHECK(d.saturated == 6);
  CHECK(full.pass);

  auto line = verify_basis(k1({1, 1, 2}), {1, 1, 1}, eps, seeds);
  CHECK(line.count == 4);
  for (const auto& d : line.dimensions) CHECK(d.saturated == 4);
  CHECK(line.pass);

  for (const auto& m : multidegrees_up_to(3, 3)) {
    auto point = verify_basis(k1({3, 2, 1}), m, eps, seeds);
    CHECK(point.count == 1);
    for (const auto& d : point.dimensions) CHECK(d.saturated == 1);
    CHECK(point.pass);
  }
}

TEST_CASE("admissible counts equal fiber dimensions", "[k1][hilbert]") {
  const std::vector<Rational> eps{0, 1, 2, -1};
  for (int n = 2; n <= 3; ++n)
    for (const auto& j : enumerate_patterns(1, n))
      for (const auto& m : multidegrees_up_to(n, 2, false)) {
        auto report = verify_basis(j, m, eps, {2, 3});
        CHECK(report.pass);
        // Where every color has positive degree the generated ideal already
        // has the right graded pieces.
        if (std::all_of(m.begin(), m.end(), [](int d) { return d > 0; }))
          for (const auto& d : report.dimensions) CHECK(d.generated == static_cast<long>(report.count));
      }
}
