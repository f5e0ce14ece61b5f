// SPDX-License-Identifier: Apache-2.0
#include "fss/report.hpp"

#include <algorithm>
#include <sstream>

#include "json_codec.hpp"

namespace fss {
namespace {

using detail::json;

json set_value(const SpaceDocument* doc, const FuzzySoftSet& s) {
  json out = {{"grades", detail::set_to_json(s)}};
  std::optional<std::string> name;
  if (doc) name = doc->name_of(s);
  else if (s.is_phi()) name = "phi";
  else if (s == s.signature().ambient()) name = "ambient";
  out["name"] = name ? json(*name) : json(nullptr);
  return out;
}

json optional_set(const SpaceDocument* doc, const std::optional<FuzzySoftSet>& s) {
  return s ? set_value(doc, *s) : json(nullptr);
}

std::string compact_set(const json& grades) {
  std::string out;
  for (const auto& [p, row] : grades.items()) {
    if (!out.empty()) out += "  ";
    out += p + "(";
    bool first = true;
    for (const auto& [x, g] : row.items()) {
      if (!first) out += " ";
      first = false;
      out += x + "=" + g.get<std::string>();
    }
    out += ")";
  }
  return out;
}

bool is_set_value(const json& v) {
  return v.is_object() && v.size() == 2 && v.contains("grades") && v.contains("name");
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_text(std::ostream& os, const json& v, int indent);

void render_entry(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_set_value(v)) {
    os << pad << key << ": ";
    if (!v["name"].is_null()) os << v["name"].get<std::string>() << " ";
    os << "[" << compact_set(v["grades"]) << "]\n";
  } else if (v.is_object() && !v.empty()) {
    os << pad << key << ":\n";
    render_text(os, v, indent + 2);
  } else if (v.is_array() && !v.empty() &&
             std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
    os << pad << key << ":";
    for (const auto& x : v) os << " " << scalar(x);
    os << "\n";
  } else if (v.is_array() && !v.empty()) {
    os << pad << key << ":\n";
    render_text(os, v, indent + 2);
  } else if (v.is_array()) {
    os << pad << key << ": (none)\n";
  } else {
    os << pad << key << ": " << scalar(v) << "\n";
  }
}

void render_text(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_entry(os, k, x, indent);
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() && !is_set_value(x)) {
        os << pad << "-\n";
        render_text(os, x, indent + 2);
      } else if (is_set_value(x)) {
        render_entry(os, "-", x, indent);
      } else {
        os << pad << "- " << scalar(x) << "\n";
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

std::string emit(const std::string& headline, const json& body, Format f) {
  if (f == Format::Json) return body.dump(2) + "\n";
  std::ostringstream os;
  os << headline << "\n";
  render_text(os, body, 2);
  return os.str();
}

json claim_entry(bool claimed, bool computed) {
  return {{"claimed", claimed}, {"computed", computed}, {"agrees", claimed == computed}};
}

const char* kind_id(PropertyKind k) {
  switch (k) {
    case PropertyKind::Iff: return "iff";
    case PropertyKind::Equality: return "equality";
    case PropertyKind::Implication: return "implication";
    case PropertyKind::Inclusion: return "inclusion";
  }
  return "unknown";
}

json classification_json(const SpaceDocument* doc, const ClassificationReport& r) {
  return {
      {"subject", set_value(doc, r.subject)},
      {"interior", set_value(doc, r.interior)},
      {"closure", set_value(doc, r.closure)},
      {"open", r.open},
      {"closed", r.closed},
      {"routes_agree", r.routes_agree()},
      {"semiopen",
       {{"definition", r.semiopen_def},
        {"witness", optional_set(doc, r.semiopen_witness)},
        {"characterization", r.semiopen_char},
        {"closure_of_interior", set_value(doc, r.closure_of_interior)}}},
      {"semiclosed",
       {{"definition", r.semiclosed_def},
        {"witness", optional_set(doc, r.semiclosed_witness)},
        {"characterization", r.semiclosed_char},
        {"interior_of_closure", set_value(doc, r.interior_of_closure)}}},
  };
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_validation(const SpaceDocument& doc, const ValidationReport& r, Format f) {
  std::vector<std::size_t> per_axiom(4, 0);
  json violations = json::array();
  for (const auto& v : r.violations) {
    ++per_axiom[static_cast<std::size_t>(v.axiom)];
    json witnesses = json::array();
    for (auto i : v.witnesses) witnesses.push_back(doc.topology[i].name);
    violations.push_back({{"axiom", axiom_id(v.axiom)},
                          {"witnesses", std::move(witnesses)},
                          {"missing", set_value(nullptr, v.missing)}});
  }
  json axioms = json::array();
  for (auto a : {Axiom::ContainsPhi, Axiom::ContainsAmbient, Axiom::MeetClosed,
                 Axiom::JoinClosed}) {
    const auto n = per_axiom[static_cast<std::size_t>(a)];
    axioms.push_back({{"axiom", axiom_id(a)}, {"passed", n == 0}, {"violations", n}});
  }
  json body = {{"passed", r.passed()},
               {"members", r.members},
               {"distinct_members", r.distinct_members},
               {"axioms", std::move(axioms)},
               {"violations", std::move(violations)}};
  if (doc.claims.topology_valid)
    body["claims"] = {{"valid", claim_entry(*doc.claims.topology_valid, r.passed())}};
  std::ostringstream head;
  head << "validate: " << (r.passed() ? "PASSED" : "FAILED") << " (" << r.distinct_members
       << " distinct members, " << r.violations.size() << " violations)";
  return emit(head.str(), body, f);
}

std::string render_classification(const SpaceDocument& doc, const std::string& name,
                                  const ClassificationReport& r, const EquivalenceReport& eq,
                                  Format f) {
  json body = classification_json(&doc, r);
  body["name"] = name;
  body["topology_valid"] = doc.to_topology().validate().passed();
  body["equivalence"] = {{"semiclosed_by_definition", eq.semiclosed_def},
                         {"interior_of_closure_inside", eq.interior_closure_inside},
                         {"complement_inside_closure_of_interior", eq.complement_inside_cl_int},
                         {"complement_semiopen_by_definition", eq.complement_semiopen_def},
                         {"all_agree", eq.all_agree()}};
  if (const auto it = doc.claims.sets.find(name); it != doc.claims.sets.end()) {
    json claims = json::object();
    for (const auto& [flag, claimed] : it->second) {
      bool computed = false;
      if (flag == "semiopen") computed = r.semiopen_def;
      else if (flag == "semiclosed") computed = r.semiclosed_def;
      else if (flag == "open") computed = r.open;
      else if (flag == "closed") computed = r.closed;
      claims[flag] = claim_entry(claimed, computed);
    }
    body["claims"] = std::move(claims);
  }
  std::ostringstream head;
  head << "classify " << name << ": semiopen=" << yes_no(r.semiopen_def)
       << " semiclosed=" << yes_no(r.semiclosed_def) << " open=" << yes_no(r.open)
       << " closed=" << yes_no(r.closed)
       << (r.routes_agree() ? "" : "  ROUTES DISAGREE");
  return emit(head.str(), body, f);
}

std::string render_set_result(const SpaceDocument& doc, const std::string& operation,
                              const std::string& name, const FuzzySoftSet& result, Format f) {
  json body = {{"operation", operation}, {"subject", name}, {"result", set_value(&doc, result)}};
  return emit(operation + "(" + name + ")", body, f);
}

std::string render_properties(const SpaceDocument& doc, const std::string& g,
                              const std::string& k, const std::vector<PropertyVerdict>& items,
                              Format f) {
  json list = json::array();
  json failed = json::array();
  for (const auto& v : items) {
    json e = {{"id", v.id},
              {"statement", v.statement},
              {"kind", kind_id(v.kind)},
              {"applicable", v.applicable},
              {"holds", v.holds}};
    if (v.lhs) e["lhs"] = set_value(&doc, *v.lhs);
    if (v.rhs) e["rhs"] = set_value(&doc, *v.rhs);
    if (v.applicable && !v.holds) failed.push_back(v.id);
    list.push_back(std::move(e));
  }
  const bool passed = failed.empty();
  json body = {{"g", g}, {"k", k}, {"items", std::move(list)}, {"failed", failed},
               {"passed", passed}};
  std::ostringstream head;
  head << "properties g=" << g << " k=" << k << ": "
       << (passed ? "all applicable items hold" : std::to_string(failed.size()) + " failed");
  return emit(head.str(), body, f);
}

std::string render_points(const SpaceDocument& doc, const std::string& name,
                          const PointCharacterization& r, Format f) {
  const auto& sig = doc.signature;
  json pts = json::array();
  for (const auto& e : r.points) {
    json membership = json::object();
    for (std::size_t x = 0; x < sig.objects(); ++x)
      membership[sig.universe()[x]] = e.point.membership()[x].to_string();
    pts.push_back({{"parameter", sig.parameters()[e.point.parameter()]},
                   {"membership", std::move(membership)},
                   {"neighbourhood", optional_set(&doc, e.neighbourhood)}});
  }
  json body = {{"subject", name},
               {"semiopen", r.semiopen},
               {"points", std::move(pts)},
               {"every_point_covered", r.every_point_covered},
               {"cover_reassembles", r.cover_reassembles},
               {"holds", r.holds()}};
  std::ostringstream head;
  head << "points " << name << ": " << r.points.size() << " points, characterization "
       << (r.holds() ? "holds" : "FAILS");
  return emit(head.str(), body, f);
}

std::string render_search(const SearchOutcome& r, Format f) {
  const auto& o = r.options;
  json body = {{"property", search_property_id(o.property)},
               {"seed", o.seed},
               {"budget", o.budget},
               {"universe", o.universe},
               {"parameters", o.parameters},
               {"grid", o.grid.denominator},
               {"max_subbasis", o.max_subbasis},
               {"status", search_status_id(r.status)},
               {"spaces_sampled", r.spaces_sampled}};
  if (r.found) {
    const auto& c = r.found->counterexample;
    const auto doc = document_from_space(r.found->topology);
    json order = json::array();
    json sets = json::object();
    json transcripts = json::array();
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      order.push_back(c.sets[i].name);
      sets[c.sets[i].name] = set_value(&doc, c.sets[i].set);
      auto t = classification_json(&doc, c.transcripts[i]);
      t["set"] = c.sets[i].name;
      t.erase("subject");
      transcripts.push_back(std::move(t));
    }
    body["witness"] = {
        {"space_index", r.found->space_index},
        {"space_seed", r.found->space_seed},
        {"space", detail::document_to_json(doc)},
        {"order", std::move(order)},
        {"sets", std::move(sets)},
        {"verification", std::move(transcripts)},
        {"verified", c.verified()},
        {"oracle_confirms", c.oracle_confirms ? json(*c.oracle_confirms) : json(nullptr)},
        {"minimized", c.minimized},
    };
  } else {
    body["witness"] = nullptr;
  }
  std::ostringstream head;
  head << "search " << search_property_id(o.property) << ": " << search_status_id(r.status)
       << " after " << r.spaces_sampled << " space(s)";
  return emit(head.str(), body, f);
}

std::string render_fuzz(const FuzzReport& r, Format f) {
  const auto& o = r.options;
  json props = json::array();
  for (const auto& t : r.tallies)
    props.push_back({{"property", t.property}, {"checked", t.checked}, {"failed", t.failed}});
  json failures = json::array();
  for (const auto& x : r.failures) {
    const auto doc = document_from_space(x.topology);
    json sets = json::object();
    for (const auto& s : x.sets) sets[s.name] = set_value(&doc, s.set);
    failures.push_back({{"property", x.property},
                        {"sample_index", x.sample_index},
                        {"sample_seed", x.sample_seed},
                        {"detail", x.detail},
                        {"space", detail::document_to_json(doc)},
                        {"sets", std::move(sets)}});
  }
  json body = {{"seed", o.seed},
               {"samples", o.samples},
               {"bounds",
                {{"max_universe", o.max_universe},
                 {"max_parameters", o.max_parameters},
                 {"max_grid", o.max_grid},
                 {"max_subbasis", o.max_subbasis}}},
               {"properties", std::move(props)},
               {"total_failed", r.total_failed()},
               {"passed", r.passed()},
               {"failures", std::move(failures)}};
  if (f == Format::Json) return body.dump(2) + "\n";

  std::ostringstream os;
  os << "fuzz seed=" << o.seed << " samples=" << o.samples << ": "
     << (r.passed() ? "PASSED" : "FAILED (" + std::to_string(r.total_failed()) + " failures)")
     << "\n";
  for (const auto& t : r.tallies) {
    os << "  " << t.property << std::string(36 - std::min<std::size_t>(35, t.property.size()), ' ')
       << t.checked << " checked, " << t.failed << " failed\n";
  }
  if (!r.failures.empty()) {
    os << "  reproduction bundles (first " << o.failures_kept << " per property):\n";
    render_text(os, body["failures"], 4);
  }
  return os.str();
}

}  // namespace fss
