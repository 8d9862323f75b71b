#pragma once

// Text and JSON forms of patterns.
//
//   k = 1:  "1,3,2"            one element per vertex
//   k >= 2: "13|23|12"         one digit per element, or
//           "1,3|2,3|1,2"      comma lists (needed once n >= 10)
//   JSON:   {"k":1,"n":3,"entries":[[1],[3],[2]]}

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "positroid/pattern.hpp"

namespace positroid {

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline int parse_int(std::string_view text) {
  if (text.empty() || text.size() > 9) throw InvalidInput("bad integer: '" + std::string(text) + "'");
  int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw InvalidInput("bad integer: '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace detail

inline JugglingPattern parse_pattern(std::string_view text) {
  std::vector<std::vector<int>> entries;
  if (text.find('|') != std::string_view::npos) {
    for (const std::string& part : detail::split(text, '|')) {
      std::vector<int> entry;
      if (part.find(',') != std::string::npos) {
        for (const std::string& item : detail::split(part, ',')) entry.push_back(detail::parse_int(item));
      } else {
        if (part.empty()) throw InvalidInput("empty pattern entry");
        for (char ch : part) entry.push_back(detail::parse_int(std::string_view(&ch, 1)));
      }
      entries.push_back(std::move(entry));
    }
  } else {
    for (const std::string& item : detail::split(text, ',')) entries.push_back({detail::parse_int(item)});
  }
  int n = static_cast<int>(entries.size());
  int k = static_cast<int>(entries.front().size());
  return validate_pattern(k, n, entries);
}

inline std::string format_pattern(const JugglingPattern& pattern) { return pattern.to_string(); }

inline nlohmann::json pattern_to_json(const JugglingPattern& pattern) {
  nlohmann::json entries = nlohmann::json::array();
  for (const KSubset& entry : pattern.entries())
    entries.push_back(std::vector<int>(entry.elements().begin(), entry.elements().end()));
  return {{"k", pattern.k()}, {"n", pattern.n()}, {"entries", std::move(entries)}};
}

inline JugglingPattern pattern_from_json(const nlohmann::json& doc) {
  try {
    return validate_pattern(doc.at("k").get<int>(), doc.at("n").get<int>(),
                            doc.at("entries").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("pattern JSON: ") + e.what());
  }
}

}  // namespace positroid
