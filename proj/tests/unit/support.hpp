// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fss/document.hpp"

namespace fss::test {

inline std::string source_path(std::string_view rel) {
  return std::string(FSS_SOURCE_DIR) + "/" + std::string(rel);
}

inline const SpaceDocument& example() {
  static const SpaceDocument doc = load_document(source_path("examples/mahanta_example.json"));
  return doc;
}

inline const SpaceDocument& repaired_example() {
  static const SpaceDocument doc =
      load_document(source_path("examples/mahanta_example_repaired.json"));
  return doc;
}

/// Grades written as "0.1 0.4 0.5 | 0.1 0 0.7 | ..." in parameter-major order.
inline std::vector<Grade> grades(std::string_view text) {
  std::vector<Grade> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '|')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '|') ++j;
    if (j > i) out.push_back(Grade::parse(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

inline FuzzySoftSet set_of(const SpaceSignature& sig, std::string_view text) {
  return FuzzySoftSet(sig, grades(text));
}

/// U = {a, b, c}, one parameter, crisp ambient set.
inline SpaceSignature crisp_abc() {
  static const SpaceSignature sig = SpaceSignature::crisp({"a", "b", "c"}, {"e"});
  return sig;
}

/// Crisp subset by its letters, e.g. crisp("ac").
inline FuzzySoftSet crisp(std::string_view letters) {
  std::vector<Grade> g(3);
  for (char c : letters) g[static_cast<std::size_t>(c - 'a')] = Grade::one();
  return FuzzySoftSet(crisp_abc(), g);
}

/// Topology generated by {a} and {b}: Φ, {a}, {b}, {a,b}, U.
inline FuzzySoftTopology crisp_ab_space() {
  const std::vector<FuzzySoftSet> sub{crisp("a"), crisp("b")};
  return generate_from_subbasis(sub, crisp_abc());
}

}  // namespace fss::test
