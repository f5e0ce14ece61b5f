// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "fss/document.hpp"

namespace fss {

enum class Format { Text, Json };

// Every renderer returns newline-terminated text. The JSON form has sorted
// keys and carries no timing or host data, so identical inputs give
// byte-identical output.

std::string render_validation(const SpaceDocument& doc, const ValidationReport& r, Format f);
std::string render_classification(const SpaceDocument& doc, const std::string& name,
                                  const ClassificationReport& r, const EquivalenceReport& eq,
                                  Format f);
std::string render_set_result(const SpaceDocument& doc, const std::string& operation,
                              const std::string& name, const FuzzySoftSet& result, Format f);
std::string render_properties(const SpaceDocument& doc, const std::string& g,
                              const std::string& k, const std::vector<PropertyVerdict>& items,
                              Format f);
std::string render_points(const SpaceDocument& doc, const std::string& name,
                          const PointCharacterization& r, Format f);
std::string render_search(const SearchOutcome& r, Format f);
std::string render_fuzz(const FuzzReport& r, Format f);

}  // namespace fss
