#pragma once

// Plain-text and JSON forms of polynomials.
//
// Text: one polynomial per line, terms in decreasing default term order,
//   "D0_12*D1_34 - e*D0_14*D1_23", "3/2*D0_1^2 + 1".
// Variables are `e` and `D<color>_<subset>`, the subset written as digits for
// n <= 9 and as a comma list otherwise.
// JSON: [{"coeff":"p/q","exps":{"D0_13":1,...}}, ...] in the same term order.

#include <nlohmann/json.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "positroid/order.hpp"
#include "positroid/pattern_io.hpp"
#include "positroid/polynomial.hpp"

namespace positroid {

inline std::string variable_name(const Variable& v) {
  if (v.is_epsilon()) return "e";
  std::vector<int> idx = v.indices();
  bool digits = v.max_index() <= 9;
  std::string out = "D" + std::to_string(v.color()) + "_";
  for (std::size_t u = 0; u < idx.size(); ++u) {
    if (!digits && u > 0) out += ',';
    out += std::to_string(idx[u]);
  }
  return out;
}

// Pluecker names do not carry n; the subset is only checked for being
// strictly increasing with positive elements.
inline Variable parse_variable(std::string_view name) {
  if (name == "e") return Variable::epsilon();
  if (name.size() < 4 || name[0] != 'D') throw InvalidInput("bad variable: " + std::string(name));
  auto underscore = name.find('_');
  if (underscore == std::string_view::npos || underscore == 1)
    throw InvalidInput("bad variable: " + std::string(name));
  int color = detail::parse_int(name.substr(1, underscore - 1));
  std::string_view body = name.substr(underscore + 1);
  std::vector<int> idx;
  if (body.find(',') != std::string_view::npos) {
    for (const std::string& item : detail::split(body, ',')) idx.push_back(detail::parse_int(item));
  } else {
    for (char ch : body) idx.push_back(detail::parse_int(std::string_view(&ch, 1)));
  }
  if (idx.empty()) throw InvalidInput("bad variable: " + std::string(name));
  int n = 0;
  for (int i : idx) n = std::max(n, i);
  KSubset subset(n, idx);  // validates increasing, in range
  return Variable::plucker(color, subset);
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += variable_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Epsilon is printed first in each term ("e*D0_1"), matching how the
// relations are usually written.
inline std::string format_term_monomial(const Monomial& m) {
  unsigned e = m.epsilon_exponent();
  std::string body = format_monomial(m.without_epsilon());
  if (e == 0) return body;
  std::string eps = e == 1 ? "e" : "e^" + std::to_string(e);
  return body.empty() ? eps : eps + "*" + body;
}

inline std::string format_polynomial(const Polynomial& p,
                                     MonomialOrder order = MonomialOrder::kBlockGrevlex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, order)) {
    Rational magnitude = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += format_term_monomial(m);
    } else {
      out += magnitude.get_str() + "*" + format_term_monomial(m);
    }
  }
  return out;
}

inline Polynomial parse_polynomial(std::string_view text) {
  Polynomial result;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto is_factor_char = [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '/' || ch == ',' ||
           ch == '^';
  };
  skip_space();
  if (text.substr(pos) == "0") return result;
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] == '+') {
        sign = 1;
      } else if (text[pos] == '-') {
        sign = -1;
      } else {
        throw InvalidInput("expected '+' or '-' at position " + std::to_string(pos));
      }
      ++pos;
      expect_term = true;
      continue;
    }
    if (text[pos] == '-') {
      sign = -sign;
      ++pos;
      skip_space();
    }
    Rational coeff = sign;
    Monomial mono;
    bool any = false;
    while (true) {
      std::size_t start = pos;
      while (pos < text.size() && is_factor_char(text[pos])) ++pos;
      std::string_view factor = text.substr(start, pos - start);
      if (factor.empty()) throw InvalidInput("empty factor at position " + std::to_string(start));
      any = true;
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= parse_rational(factor);
      } else {
        unsigned exponent = 1;
        auto caret = factor.find('^');
        if (caret != std::string_view::npos) {
          exponent = static_cast<unsigned>(detail::parse_int(factor.substr(caret + 1)));
          factor = factor.substr(0, caret);
        }
        mono = mono * Monomial(parse_variable(factor), exponent);
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw InvalidInput("empty term");
    result.add_term(mono, coeff);
    expect_term = false;
    sign = 1;
  }
  if (expect_term && !result.is_zero()) throw InvalidInput("trailing operator");
  return result;
}

inline nlohmann::json polynomial_to_json(const Polynomial& p,
                                         MonomialOrder order = MonomialOrder::kBlockGrevlex) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms(p, order)) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) exps[variable_name(v)] = e;
    terms.push_back({{"coeff", c.get_str()}, {"exps", std::move(exps)}});
  }
  return terms;
}

inline Polynomial polynomial_from_json(const nlohmann::json& doc) {
  Polynomial result;
  try {
    for (const auto& term : doc) {
      Rational coeff = parse_rational(term.at("coeff").get<std::string>());
      Monomial mono;
      for (const auto& [name, e] : term.at("exps").items())
        mono = mono * Monomial(parse_variable(name), e.get<unsigned>());
      result.add_term(mono, coeff);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("polynomial JSON: ") + e.what());
  }
  return result;
}

}  // namespace positroid
