#pragma once

// Verification commands behind the command-line tool. Each returns a report
// with the parameters, one entry per case, and an overall verdict. Reports
// serialize deterministically; timings are only attached on request.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "positroid/fiber.hpp"
#include "positroid/fiber_io.hpp"
#include "positroid/hilbert.hpp"
#include "positroid/ideal_factory.hpp"
#include "positroid/k1_basis.hpp"
#include "positroid/pattern_io.hpp"
#include "positroid/polynomial_io.hpp"

namespace positroid {

inline constexpr const char* kReportSchema = "positroid-report/1";

struct VerificationReport {
  explicit VerificationReport(std::string name = {}) : task(std::move(name)) {}

  std::string task;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<nlohmann::json> cases;
  std::vector<std::string> findings;
  bool pass = true;
  double seconds = 0;

  void add_case(nlohmann::json entry, bool ok) {
    entry["pass"] = ok;
    pass = pass && ok;
    cases.push_back(std::move(entry));
  }

  nlohmann::json to_json(bool with_timings = false) const {
    nlohmann::json doc = {{"schema", kReportSchema}, {"task", task}, {"parameters", parameters}};
    doc["cases"] = cases;
    if (!findings.empty()) doc["findings"] = findings;
    doc["pass"] = pass;
    if (with_timings) doc["seconds"] = seconds;
    return doc;
  }
};

struct SweepOptions {
  int max_degree = 2;
  std::vector<Rational> epsilons{0, 1, 2, -1};
  std::vector<std::uint32_t> seeds{2, 3, 5, 7, 11};
  bool saturate = false;  // also report dimensions of the saturated ideal (always on for k = 1)
  GroebnerLimits groebner;
  HilbertLimits hilbert;
};

namespace detail {

inline nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

inline nlohmann::json multidegree_to_json(const MultiDegree& m) { return nlohmann::json(m); }

inline std::string multidegree_key(const MultiDegree& m) {
  std::string key;
  for (std::size_t b = 0; b < m.size(); ++b) key += (b ? "," : "") + std::to_string(m[b]);
  return key;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline VerificationReport cmd_patterns(int k, int n, EnumerationLimits limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"patterns"};
  report.parameters = {{"k", k}, {"n", n}};
  const auto patterns = enumerate_patterns(k, n, limits);
  for (const JugglingPattern& p : patterns)
    report.add_case({{"pattern", format_pattern(p)}, {"ell", p.ell()}}, true);
  report.parameters["count"] = patterns.size();
  report.seconds = clock.seconds();
  return report;
}

// Generators of the global ideal, or of its specialization at `epsilon`.
inline VerificationReport cmd_ideal(const JugglingPattern& pattern, const std::optional<Rational>& epsilon,
                                    bool with_groebner, const GroebnerLimits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"ideal"};
  report.parameters = {{"k", pattern.k()}, {"n", pattern.n()}, {"pattern", format_pattern(pattern)}};
  Ideal ideal = global_positroid_ideal(pattern);
  if (epsilon) {
    report.parameters["epsilon"] = to_string(*epsilon);
    ideal = specialize(ideal, *epsilon);
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const Polynomial& g : ideal.generators()) gens.push_back(format_polynomial(g));
  nlohmann::json entry = {{"generators", gens}, {"count", ideal.generators().size()}};
  if (with_groebner) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Polynomial& g : ideal.groebner_basis(MonomialOrder::kBlockGrevlex, limits).elements())
      basis.push_back(format_polynomial(g));
    entry["groebner_basis"] = std::move(basis);
  }
  report.add_case(std::move(entry), true);
  report.seconds = clock.seconds();
  return report;
}

// Table of dim (Q[D] / I(e))_m for all 1 <= |m| <= max_degree and each e.
inline VerificationReport cmd_hilbert(const JugglingPattern& pattern, const SweepOptions& options) {
  detail::Stopwatch clock;
  VerificationReport report{"hilbert"};
  report.parameters = {{"k", pattern.k()},
                       {"n", pattern.n()},
                       {"pattern", format_pattern(pattern)},
                       {"max_degree", options.max_degree},
                       {"epsilons", detail::rationals_to_json(options.epsilons)},
                       {"saturate", options.saturate}};
  const Ideal global = global_positroid_ideal(pattern);
  std::vector<Ideal> fibers;
  for (const Rational& eps : options.epsilons) {
    Ideal fiber = specialize(global, eps);
    fibers.push_back(options.saturate ? saturate_irrelevant(fiber, options.groebner) : std::move(fiber));
  }
  for (const MultiDegree& m : multidegrees_up_to(pattern.n(), options.max_degree, false)) {
    nlohmann::json entry = {{"multidegree", detail::multidegree_to_json(m)}};
    try {
      nlohmann::json dims = nlohmann::json::array();
      for (const Ideal& fiber : fibers) dims.push_back(graded_component_dim(fiber, m, options.hilbert));
      entry["dimensions"] = std::move(dims);
      report.add_case(std::move(entry), true);
    } catch (const ResourceLimit& e) {
      entry["error"] = e.what();
      report.add_case(std::move(entry), false);
    }
  }
  report.seconds = clock.seconds();
  return report;
}

// For each pattern and 1 <= |m| <= max_degree: the dimensions of the ideal as
// generated must agree across all e. For k = 1 the dimensions of the
// saturated ideal (the coordinate ring of the fiber) must also agree across e
// and equal count_admissible. For k >= 2 saturated dimensions are reported on
// request, and disagreement across e is recorded as a finding.
inline VerificationReport cmd_flatness(const std::vector<JugglingPattern>& patterns, const SweepOptions& options) {
  detail::Stopwatch clock;
  VerificationReport report{"flatness"};
  if (patterns.empty()) throw InvalidInput("flatness: no patterns");
  const int k = patterns.front().k(), n = patterns.front().n();
  report.parameters = {{"k", k},
                       {"n", n},
                       {"patterns", patterns.size()},
                       {"max_degree", options.max_degree},
                       {"epsilons", detail::rationals_to_json(options.epsilons)}};
  const bool saturate = options.saturate || k == 1;
  report.parameters["saturate"] = saturate;

  for (const JugglingPattern& pattern : patterns) {
    const std::string name = format_pattern(pattern);
    std::vector<Ideal> generated, saturated;
    try {
      const Ideal global = global_positroid_ideal(pattern);
      for (const Rational& eps : options.epsilons) {
        generated.push_back(specialize(global, eps));
        if (saturate) saturated.push_back(saturate_irrelevant(generated.back(), options.groebner));
      }
    } catch (const ResourceLimit& e) {
      report.add_case({{"pattern", name}, {"error", e.what()}}, false);
      continue;
    }
    for (const MultiDegree& m : multidegrees_up_to(n, options.max_degree, false)) {
      nlohmann::json entry = {{"pattern", name}, {"multidegree", detail::multidegree_to_json(m)}};
      try {
        std::vector<long> gen_dims, sat_dims;
        for (const Ideal& fiber : generated) gen_dims.push_back(graded_component_dim(fiber, m, options.hilbert));
        for (const Ideal& fiber : saturated) sat_dims.push_back(graded_component_dim(fiber, m, options.hilbert));
        bool ok = std::adjacent_find(gen_dims.begin(), gen_dims.end(), std::not_equal_to<>()) == gen_dims.end();
        entry["dimensions"] = gen_dims;
        const bool sat_constant =
            std::adjacent_find(sat_dims.begin(), sat_dims.end(), std::not_equal_to<>()) == sat_dims.end();
        if (saturate) entry["saturated_dimensions"] = sat_dims;
        if (k == 1) {
          const auto count = count_admissible(pattern, m);
          entry["admissible"] = count;
          for (long d : sat_dims) ok = ok && d == static_cast<long>(count);
        } else if (saturate && !sat_constant) {
          report.findings.push_back("pattern " + name + ", multidegree (" + detail::multidegree_key(m) +
                                    "): saturated dimensions differ across epsilon");
        }
        report.add_case(std::move(entry), ok);
      } catch (const ResourceLimit& e) {
        entry["error"] = e.what();
        report.add_case(std::move(entry), false);
      }
    }
  }
  report.seconds = clock.seconds();
  return report;
}

// Irreducible components of the special fiber, labeled by anchor sets.
inline VerificationReport cmd_components(const JugglingPattern& pattern) {
  detail::Stopwatch clock;
  VerificationReport report{"components"};
  report.parameters = {{"k", pattern.k()}, {"n", pattern.n()}, {"pattern", format_pattern(pattern)}};
  const auto anchors = components_of_special_fiber(pattern);
  nlohmann::json list = nlohmann::json::array();
  for (const AnchorSet& s : anchors) list.push_back(std::vector<int>(s.elements().begin(), s.elements().end()));
  std::optional<std::uint64_t> expected;
  if (pattern.k() == 1) expected = static_cast<std::uint64_t>(pattern.ell());
  else if (pattern.is_constant_minimal()) expected = binomial(pattern.n(), pattern.k());
  nlohmann::json entry = {{"count", anchors.size()}, {"anchor_sets", std::move(list)}};
  if (expected) entry["expected"] = *expected;
  report.add_case(std::move(entry), !expected || *expected == anchors.size());
  report.seconds = clock.seconds();
  return report;
}

inline VerificationReport cmd_basis(const JugglingPattern& pattern, const MultiDegree& m, const SweepOptions& options) {
  detail::Stopwatch clock;
  VerificationReport report{"basis"};
  report.parameters = {{"k", pattern.k()},
                       {"n", pattern.n()},
                       {"pattern", format_pattern(pattern)},
                       {"multidegree", detail::multidegree_to_json(m)},
                       {"epsilons", detail::rationals_to_json(options.epsilons)},
                       {"seeds", options.seeds}};
  BasisReport basis = verify_basis(pattern, m, options.epsilons, options.seeds, options.hilbert);
  nlohmann::json monomials = nlohmann::json::array();
  for (const ColoredMonomial& mon : basis.admissible) monomials.push_back(mon.to_string());
  nlohmann::json dims = nlohmann::json::array();
  for (const BasisDimension& d : basis.dimensions)
    dims.push_back({{"epsilon", to_string(d.epsilon)}, {"generated", d.generated}, {"saturated", d.saturated}});
  report.add_case({{"admissible", std::move(monomials)},
                   {"count", basis.count},
                   {"expected", basis.expected},
                   {"dimensions", std::move(dims)},
                   {"evaluation_rank", basis.evaluation_rank},
                   {"samples", basis.samples}},
                  basis.pass && basis.count == basis.expected);
  report.seconds = clock.seconds();
  return report;
}

inline VerificationReport cmd_membership(const FiberPoint& point, const JugglingPattern& pattern) {
  detail::Stopwatch clock;
  VerificationReport report{"membership"};
  report.parameters = {{"k", pattern.k()},
                       {"n", pattern.n()},
                       {"pattern", format_pattern(pattern)},
                       {"epsilon", to_string(point.epsilon)}};
  if (static_cast<int>(point.spaces.size()) != pattern.n()) throw InvalidInput("point has the wrong number of spaces");
  for (const Subspace& s : point.spaces)
    if (s.n() != pattern.n() || s.k() != pattern.k()) throw InvalidInput("point spaces do not match (k, n)");
  const bool subrep = is_subrepresentation(point);
  nlohmann::json schubert = nlohmann::json::array();
  bool all_schubert = true;
  for (int b = 0; b < pattern.n(); ++b) {
    bool ok = in_opposite_schubert(point.spaces[b], pattern[b]);
    all_schubert = all_schubert && ok;
    schubert.push_back(ok);
  }
  const Ideal fiber = specialize(global_positroid_ideal(pattern), point.epsilon);
  std::size_t nonvanishing = 0;
  for (const Polynomial& g : fiber.generators())
    if (evaluate_on_point(g, point) != 0) ++nonvanishing;
  nlohmann::json entry = {{"subrepresentation", subrep},
                          {"schubert", std::move(schubert)},
                          {"nonvanishing_generators", nonvanishing}};
  const bool member = subrep && all_schubert;
  if (member && point.epsilon == 0) entry["projection"] = project_and_check(point, pattern);
  entry["member"] = member;
  report.add_case(std::move(entry), member);
  report.seconds = clock.seconds();
  return report;
}

// Projective dimension of the fiber: Krull dimension of Q[D] / I(e) minus n.
inline int cmd_dimension(const JugglingPattern& pattern, const Rational& epsilon, const GroebnerLimits& limits = {}) {
  const Ideal fiber = specialize(global_positroid_ideal(pattern), epsilon);
  return fiber.krull_dimension(MonomialOrder::kBlockGrevlex, limits) - pattern.n();
}

inline VerificationReport dimension_report(const JugglingPattern& pattern, const std::vector<Rational>& epsilons,
                                           const GroebnerLimits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report{"dim"};
  report.parameters = {{"k", pattern.k()},
                       {"n", pattern.n()},
                       {"pattern", format_pattern(pattern)},
                       {"epsilons", detail::rationals_to_json(epsilons)}};
  std::optional<int> first;
  for (const Rational& eps : epsilons) {
    nlohmann::json entry = {{"epsilon", to_string(eps)}};
    try {
      int dim = cmd_dimension(pattern, eps, limits);
      entry["dimension"] = dim;
      bool ok = !first || *first == dim;
      if (pattern.k() == 1) {
        entry["expected"] = pattern.ell() - 1;
        ok = ok && dim == pattern.ell() - 1;
      }
      if (!first) first = dim;
      report.add_case(std::move(entry), ok);
    } catch (const ResourceLimit& e) {
      entry["error"] = e.what();
      report.add_case(std::move(entry), false);
    }
  }
  report.seconds = clock.seconds();
  return report;
}

}  // namespace positroid
