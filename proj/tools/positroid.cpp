// positroid: command-line front end for the verification commands.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 invalid input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "positroid/positroid.hpp"

namespace {

using namespace positroid;

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : detail::split(text, ',')) out.push_back(parse_rational(part));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<std::uint32_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const std::string& part : detail::split(text, ',')) out.push_back(static_cast<std::uint32_t>(detail::parse_int(part)));
  return out;
}

MultiDegree parse_multidegree(const std::string& text) {
  MultiDegree m;
  for (const std::string& part : detail::split(text, ',')) m.push_back(detail::parse_int(part));
  return m;
}

void print_text(std::ostream& out, const VerificationReport& report, bool timings) {
  out << report.task << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
  out << "parameters: " << report.parameters.dump() << '\n';
  for (const auto& entry : report.cases) out << "  " << entry.dump() << '\n';
  for (const auto& finding : report.findings) out << "finding: " << finding << '\n';
  if (timings) out << "seconds: " << report.seconds << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global positroid varieties: exact checks"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, timings = false, saturate = false, all = false, groebner = false;
  std::string out_path, epsilon_list = "0,1,2,-1", seed_list = "2,3,5,7,11";
  std::string pattern_text, multidegree_text, point_path, epsilon_text;
  int max_degree = 2, k = 1, n = 3;

  app.add_flag("--json", json, "Print the JSON report");
  app.add_option("--out", out_path, "Write the report to a file");
  app.add_option("--max-degree", max_degree, "Largest total degree |m| in sweeps")->check(CLI::Range(0, 64));
  app.add_option("--epsilon-list", epsilon_list, "Comma separated epsilon values (p or p/q)");
  app.add_option("--seed-list", seed_list, "Comma separated sampling seeds");
  app.add_flag("--timings", timings, "Include wall-clock time in the report");

  auto* patterns = app.add_subcommand("patterns", "Enumerate juggling patterns");
  patterns->add_option("--k", k)->required();
  patterns->add_option("--n", n)->required();

  auto* ideal = app.add_subcommand("ideal", "Generators of the global ideal");
  ideal->add_option("--pattern", pattern_text)->required();
  ideal->add_option("--epsilon", epsilon_text, "Specialize epsilon");
  ideal->add_flag("--groebner", groebner, "Also print a reduced Groebner basis");

  auto* hilbert = app.add_subcommand("hilbert", "Graded component dimensions");
  hilbert->add_option("--pattern", pattern_text)->required();
  hilbert->add_flag("--saturate", saturate, "Saturate by the irrelevant ideal first");

  auto* flatness = app.add_subcommand("flatness", "Compare graded dimensions across epsilon");
  flatness->add_option("--pattern", pattern_text);
  flatness->add_flag("--all", all, "Every pattern for the given k, n");
  flatness->add_option("--k", k);
  flatness->add_option("--n", n);
  flatness->add_flag("--saturate", saturate, "Also compare saturated dimensions (always on for k = 1)");

  auto* components = app.add_subcommand("components", "Components of the special fiber");
  components->add_option("--pattern", pattern_text)->required();

  auto* basis = app.add_subcommand("basis", "Admissible monomial basis check (k = 1)");
  basis->add_option("--pattern", pattern_text)->required();
  basis->add_option("--multidegree", multidegree_text)->required();

  auto* membership = app.add_subcommand("membership", "Check a point against a fiber");
  membership->add_option("--point", point_path)->required();
  membership->add_option("--pattern", pattern_text)->required();
  membership->add_option("--epsilon", epsilon_text, "Override the point's epsilon");

  auto* dim = app.add_subcommand("dim", "Projective dimension of fibers");
  dim->add_option("--pattern", pattern_text)->required();
  dim->add_option("--epsilon", epsilon_text, "Single epsilon instead of --epsilon-list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* cap = std::getenv("POSITROID_MAX_TERMS"))
      max_polynomial_terms() = static_cast<std::size_t>(detail::parse_int(cap));

    SweepOptions options;
    options.max_degree = max_degree;
    options.epsilons = parse_rational_list(epsilon_list);
    options.seeds = parse_seed_list(seed_list);
    options.saturate = saturate;

    VerificationReport report;
    if (*patterns) {
      report = cmd_patterns(k, n);
    } else if (*ideal) {
      std::optional<Rational> eps;
      if (!epsilon_text.empty()) eps = parse_rational(epsilon_text);
      report = cmd_ideal(parse_pattern(pattern_text), eps, groebner);
    } else if (*hilbert) {
      report = cmd_hilbert(parse_pattern(pattern_text), options);
    } else if (*flatness) {
      std::vector<JugglingPattern> list;
      if (all) {
        if (!pattern_text.empty()) throw InvalidInput("use either --pattern or --all");
        list = enumerate_patterns(k, n);
      } else {
        if (pattern_text.empty()) throw InvalidInput("flatness needs --pattern or --all");
        list.push_back(parse_pattern(pattern_text));
      }
      report = cmd_flatness(list, options);
    } else if (*components) {
      report = cmd_components(parse_pattern(pattern_text));
    } else if (*basis) {
      report = cmd_basis(parse_pattern(pattern_text), parse_multidegree(multidegree_text), options);
    } else if (*membership) {
      std::ifstream in(point_path);
      if (!in) throw InvalidInput("cannot read " + point_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("point file: ") + e.what());
      }
      FiberPoint point = fiber_point_from_json(doc);
      if (!epsilon_text.empty()) point.epsilon = parse_rational(epsilon_text);
      report = cmd_membership(point, parse_pattern(pattern_text));
    } else if (*dim) {
      std::vector<Rational> eps = epsilon_text.empty() ? options.epsilons : std::vector<Rational>{parse_rational(epsilon_text)};
      report = dimension_report(parse_pattern(pattern_text), eps);
    }

    std::ostringstream text;
    if (json)
      text << report.to_json(timings).dump(2) << '\n';
    else
      print_text(text, report, timings);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw InvalidInput("cannot write " + out_path);
      out << report.to_json(timings).dump(2) << '\n';
    }
    std::cout << text.str();
    return report.pass ? 0 : 1;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
