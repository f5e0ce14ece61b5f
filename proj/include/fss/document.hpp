// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fss/explorer.hpp"

namespace fss {

/// Assertions a document makes about itself, to be compared with what the
/// tool computes. Keys per set: "open", "closed", "semiopen", "semiclosed".
struct Claims {
  std::optional<bool> topology_valid;
  std::map<std::string, std::map<std::string, bool>> sets;

  bool empty() const noexcept { return !topology_valid && sets.empty(); }
};

/// On-disk description of a space: signature, topology members and extra
/// query sets, all by name.
///
/// Text form is JSON:
///
///   {
///     "universe":   ["h1", "h2"],
///     "parameters": ["e1"],
///     "ambient":    {"e1": {"h1": "0.2", "h2": "1"}},
///     "topology":   {"phi": "phi", "ambient": "ambient", "T3": {"e1": {"h1": "0.1"}}},
///     "sets":       {"g": {"e1": {"h2": "1/3"}}},
///     "claims":     {"topology": {"valid": true}, "sets": {"g": {"semiopen": true}}}
///   }
///
/// Grades are strings ("0.25", "1/3"); omitted cells are zero. A set may be
/// written as the string "phi" or "ambient". Those two names are reserved and
/// always resolve to Φ_E and f_E.
struct SpaceDocument {
  SpaceSignature signature;
  std::vector<NamedSet> topology;
  std::vector<NamedSet> sets;
  Claims claims;

  /// Looks up "phi", "ambient", topology members and query sets. Throws
  /// ErrorCode::UnknownName.
  FuzzySoftSet find(std::string_view name) const;
  std::optional<std::string> name_of(const FuzzySoftSet& s) const;

  std::vector<FuzzySoftSet> members() const;
  FuzzySoftTopology to_topology() const;
};

/// Errors carry the JSON path of the offending field (e.g.
/// "topology.T4.e2.h3") or, for syntax errors, the line and column.
SpaceDocument parse_document(std::string_view text);
SpaceDocument load_document(const std::string& path);

/// Canonical text: sorted keys, two-space indent, every cell explicit,
/// grades as reduced decimals or "p/q", sets equal to Φ_E / f_E written as
/// "phi" / "ambient". Ends with a newline.
std::string serialize_document(const SpaceDocument& doc);

SpaceDocument document_from_space(const FuzzySoftTopology& t, std::string_view member_prefix = "T");

}  // namespace fss
