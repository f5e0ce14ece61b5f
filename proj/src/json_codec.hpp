// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "fss/document.hpp"
#include "json.hpp"

namespace fss::detail {

using json = nlohmann::json;

/// {"e1": {"h1": "0.2", ...}, ...} with every cell present.
json set_to_json(const FuzzySoftSet& s);
/// Same, but Φ_E and f_E collapse to "phi" / "ambient".
json set_to_json_ref(const FuzzySoftSet& s);

/// The document as a JSON value, in the canonical form.
json document_to_json(const SpaceDocument& doc);

std::string join_path(const std::string& base, const std::string& key);

}  // namespace fss::detail
