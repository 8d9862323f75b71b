#pragma once

// {"epsilon":"p/q","spaces":[[["p/q",...],...],...]}, one row-major k x n
// matrix per vertex.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "positroid/fiber.hpp"

namespace positroid {

inline nlohmann::json fiber_point_to_json(const FiberPoint& point) {
  nlohmann::json spaces = nlohmann::json::array();
  for (const Subspace& s : point.spaces) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < s.k(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (const Rational& x : s.basis().row(i)) row.push_back(to_string(x));
      rows.push_back(std::move(row));
    }
    spaces.push_back(std::move(rows));
  }
  return {{"epsilon", to_string(point.epsilon)}, {"spaces", std::move(spaces)}};
}

inline FiberPoint fiber_point_from_json(const nlohmann::json& doc) {
  auto entry = [](const nlohmann::json& x) {
    if (x.is_string()) return parse_rational(x.get<std::string>());
    if (x.is_number_integer()) return Rational(x.get<long>());
    throw InvalidInput("fiber point: matrix entries must be strings or integers");
  };
  try {
    FiberPoint point{entry(doc.at("epsilon")), {}};
    for (const auto& rows : doc.at("spaces")) {
      std::vector<std::vector<Rational>> values;
      for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(entry(x));
        values.push_back(std::move(r));
      }
      point.spaces.emplace_back(Matrix::from_rows(values));
    }
    if (point.spaces.empty()) throw InvalidInput("fiber point: no spaces");
    return point;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("fiber point JSON: ") + e.what());
  }
}

}  // namespace positroid
