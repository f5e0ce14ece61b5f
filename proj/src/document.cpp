// SPDX-License-Identifier: Apache-2.0
#include "fss/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fss/error.hpp"
#include "json_codec.hpp"

namespace fss {
namespace detail {

json set_to_json(const FuzzySoftSet& s) {
  const auto& sig = s.signature();
  json out = json::object();
  for (std::size_t e = 0; e < sig.parameter_count(); ++e) {
    json row = json::object();
    for (std::size_t x = 0; x < sig.objects(); ++x) row[sig.universe()[x]] = s.at(e, x).to_string();
    out[sig.parameters()[e]] = std::move(row);
  }
  return out;
}

json set_to_json_ref(const FuzzySoftSet& s) {
  if (s.is_phi()) return "phi";
  if (s == s.signature().ambient()) return "ambient";
  return set_to_json(s);
}

std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

}  // namespace detail

namespace {

// Input keeps the author's key order, so members are audited in document order.
using in_json = nlohmann::ordered_json;
using detail::join_path;

const std::set<std::string> kReserved = {"phi", "ambient"};
const std::set<std::string> kClaimKeys = {"open", "closed", "semiopen", "semiclosed"};

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& what) {
  throw Error(code, (path.empty() ? std::string("document") : path) + ": " + what);
}

const in_json& require(const in_json& obj, const char* key, in_json::value_t type, const char* type_name) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::Malformed, key, "missing field");
  if (it->type() != type) fail(ErrorCode::Malformed, key, std::string("expected ") + type_name);
  return *it;
}

std::vector<std::string> parse_names(const in_json& arr, const std::string& path) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) fail(ErrorCode::Malformed, p, "expected a name string");
    auto n = arr[i].get<std::string>();
    if (n.empty()) fail(ErrorCode::Malformed, p, "empty name");
    if (!seen.insert(n).second) fail(ErrorCode::DuplicateName, p, "duplicate name \"" + n + "\"");
    out.push_back(std::move(n));
  }
  if (out.empty()) fail(ErrorCode::Malformed, path, "must not be empty");
  return out;
}

Grade parse_grade(const in_json& v, const std::string& path) {
  if (!v.is_string()) fail(ErrorCode::Malformed, path, "grade must be a string such as \"0.2\"");
  try {
    return Grade::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), path, e.what());
  }
}

// Grades of a set written in document form, before any ambient check.
std::vector<Grade> parse_cells(const in_json& v, const std::vector<std::string>& universe,
                               const std::vector<std::string>& parameters,
                               const std::string& path) {
  if (!v.is_object()) fail(ErrorCode::Malformed, path, "expected an object of parameters");
  std::vector<Grade> cells(universe.size() * parameters.size());
  for (const auto& [pname, row] : v.items()) {
    const auto ppath = join_path(path, pname);
    const auto pit = std::find(parameters.begin(), parameters.end(), pname);
    if (pit == parameters.end()) fail(ErrorCode::UnknownName, ppath, "unknown parameter");
    if (!row.is_object()) fail(ErrorCode::Malformed, ppath, "expected an object of objects");
    const auto e = static_cast<std::size_t>(pit - parameters.begin());
    for (const auto& [xname, grade] : row.items()) {
      const auto xpath = join_path(ppath, xname);
      const auto xit = std::find(universe.begin(), universe.end(), xname);
      if (xit == universe.end()) fail(ErrorCode::UnknownName, xpath, "unknown object");
      cells[e * universe.size() + static_cast<std::size_t>(xit - universe.begin())] =
          parse_grade(grade, xpath);
    }
  }
  return cells;
}

FuzzySoftSet parse_set(const in_json& v, const SpaceSignature& sig, const std::string& path) {
  if (v.is_string()) {
    const auto ref = v.get<std::string>();
    if (ref == "phi") return sig.phi();
    if (ref == "ambient") return sig.ambient();
    fail(ErrorCode::Malformed, path, "set reference must be \"phi\" or \"ambient\"");
  }
  auto cells = parse_cells(v, sig.universe(), sig.parameters(), path);
  const auto& amb = sig.ambient_grades();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (amb[c] < cells[c]) {
      const auto e = c / sig.objects();
      const auto x = c % sig.objects();
      fail(ErrorCode::SubsetViolation,
           join_path(join_path(path, sig.parameters()[e]), sig.universe()[x]),
           "grade " + cells[c].to_string() + " exceeds ambient grade " + amb[c].to_string());
    }
  }
  return FuzzySoftSet(sig, std::move(cells));
}

std::vector<NamedSet> parse_named_sets(const in_json& obj, const SpaceSignature& sig,
                                       const std::string& path, bool allow_reserved) {
  if (!obj.is_object()) fail(ErrorCode::Malformed, path, "expected an object of named sets");
  std::vector<NamedSet> out;
  for (const auto& [name, v] : obj.items()) {
    const auto p = join_path(path, name);
    auto s = parse_set(v, sig, p);
    if (kReserved.count(name)) {
      if (!allow_reserved) fail(ErrorCode::DuplicateName, p, "\"" + name + "\" is a reserved name");
      if (s != (name == "phi" ? sig.phi() : sig.ambient()))
        fail(ErrorCode::DuplicateName, p, "reserved name \"" + name + "\" bound to a different set");
    }
    out.push_back({name, std::move(s)});
  }
  return out;
}

Claims parse_claims(const in_json& obj) {
  Claims c;
  if (!obj.is_object()) fail(ErrorCode::Malformed, "claims", "expected an object");
  for (const auto& [key, v] : obj.items()) {
    const auto p = join_path("claims", key);
    if (key == "topology") {
      if (!v.is_object()) fail(ErrorCode::Malformed, p, "expected an object");
      for (const auto& [k2, b] : v.items()) {
        if (k2 != "valid" || !b.is_boolean())
          fail(ErrorCode::Malformed, join_path(p, k2), "only a boolean \"valid\" is allowed");
        c.topology_valid = b.get<bool>();
      }
    } else if (key == "sets") {
      if (!v.is_object()) fail(ErrorCode::Malformed, p, "expected an object");
      for (const auto& [name, flags] : v.items()) {
        const auto np = join_path(p, name);
        if (!flags.is_object()) fail(ErrorCode::Malformed, np, "expected an object");
        for (const auto& [flag, b] : flags.items()) {
          if (!kClaimKeys.count(flag) || !b.is_boolean())
            fail(ErrorCode::Malformed, join_path(np, flag),
                 "expected a boolean open/closed/semiopen/semiclosed flag");
          c.sets[name][flag] = b.get<bool>();
        }
      }
    } else {
      fail(ErrorCode::Malformed, p, "unknown claims section");
    }
  }
  return c;
}

// nlohmann::json keeps the last of repeated keys; names must be unique, so
// repeats are caught while parsing.
in_json parse_json_strict(std::string_view text) {
  struct Frame {
    std::set<std::string> keys;
    std::string path;
    std::string current;
    bool is_object;
  };
  std::vector<Frame> stack;
  const auto here = [&] {
    std::string p;
    for (const auto& f : stack)
      if (f.is_object && !f.current.empty()) p = join_path(p, f.current);
    return p;
  };
  in_json::parser_callback_t cb = [&](int, in_json::parse_event_t ev, in_json& parsed) {
    switch (ev) {
      case in_json::parse_event_t::object_start:
        stack.push_back({{}, here(), {}, true});
        break;
      case in_json::parse_event_t::array_start:
        stack.push_back({{}, here(), {}, false});
        break;
      case in_json::parse_event_t::object_end:
      case in_json::parse_event_t::array_end:
        stack.pop_back();
        break;
      case in_json::parse_event_t::key: {
        auto& top = stack.back();
        const auto key = parsed.get<std::string>();
        if (!top.keys.insert(key).second)
          fail(ErrorCode::DuplicateName, join_path(top.path, key), "duplicate key");
        top.current = key;
        break;
      }
      case in_json::parse_event_t::value:
        break;
    }
    return true;
  };
  try {
    return in_json::parse(text.begin(), text.end(), cb);
  } catch (const in_json::parse_error& e) {
    throw Error(ErrorCode::Malformed, std::string("syntax error: ") + e.what());
  }
}

}  // namespace

FuzzySoftSet SpaceDocument::find(std::string_view name) const {
  for (const auto& n : topology)
    if (n.name == name) return n.set;
  for (const auto& n : sets)
    if (n.name == name) return n.set;
  if (name == "phi" || name == "ambient") {
    // Reserved names resolve even when the document does not list them.
    return name == "phi" ? signature.phi() : signature.ambient();
  }
  throw Error(ErrorCode::UnknownName, "no set named \"" + std::string(name) + "\"");
}

std::optional<std::string> SpaceDocument::name_of(const FuzzySoftSet& s) const {
  for (const auto& n : topology)
    if (n.set == s) return n.name;
  for (const auto& n : sets)
    if (n.set == s) return n.name;
  if (s.is_phi()) return "phi";
  if (s == signature.ambient()) return "ambient";
  return std::nullopt;
}

std::vector<FuzzySoftSet> SpaceDocument::members() const {
  std::vector<FuzzySoftSet> out;
  out.reserve(topology.size());
  for (const auto& n : topology) out.push_back(n.set);
  return out;
}

FuzzySoftTopology SpaceDocument::to_topology() const {
  return FuzzySoftTopology(signature, members());
}

SpaceDocument parse_document(std::string_view text) {
  const in_json root = parse_json_strict(text);
  if (!root.is_object()) fail(ErrorCode::Malformed, "", "top level must be an object");
  for (const auto& [key, v] : root.items()) {
    static const std::set<std::string> known = {"universe", "parameters", "ambient",
                                                "topology", "sets",       "claims"};
    if (!known.count(key)) fail(ErrorCode::Malformed, key, "unknown field");
  }
  auto universe = parse_names(require(root, "universe", in_json::value_t::array, "an array"),
                              "universe");
  auto parameters = parse_names(require(root, "parameters", in_json::value_t::array, "an array"),
                                "parameters");
  auto ambient = parse_cells(require(root, "ambient", in_json::value_t::object, "an object"),
                             universe, parameters, "ambient");
  SpaceSignature sig(std::move(universe), std::move(parameters), std::move(ambient));

  SpaceDocument doc{sig, {}, {}, {}};
  doc.topology = parse_named_sets(require(root, "topology", in_json::value_t::object, "an object"),
                                  sig, "topology", true);
  if (const auto it = root.find("sets"); it != root.end())
    doc.sets = parse_named_sets(*it, sig, "sets", false);
  for (const auto& s : doc.sets)
    for (const auto& t : doc.topology)
      if (s.name == t.name)
        fail(ErrorCode::DuplicateName, "sets." + s.name, "name already used in topology");
  if (const auto it = root.find("claims"); it != root.end()) doc.claims = parse_claims(*it);
  return doc;
}

SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

detail::json detail::document_to_json(const SpaceDocument& doc) {
  const auto& sig = doc.signature;
  json root = json::object();
  root["universe"] = sig.universe();
  root["parameters"] = sig.parameters();
  root["ambient"] = detail::set_to_json(sig.ambient());
  json top = json::object();
  for (const auto& n : doc.topology) top[n.name] = detail::set_to_json_ref(n.set);
  root["topology"] = std::move(top);
  if (!doc.sets.empty()) {
    json sets = json::object();
    for (const auto& n : doc.sets) sets[n.name] = detail::set_to_json_ref(n.set);
    root["sets"] = std::move(sets);
  }
  if (!doc.claims.empty()) {
    json claims = json::object();
    if (doc.claims.topology_valid) claims["topology"] = {{"valid", *doc.claims.topology_valid}};
    if (!doc.claims.sets.empty()) claims["sets"] = doc.claims.sets;
    root["claims"] = std::move(claims);
  }
  return root;
}

std::string serialize_document(const SpaceDocument& doc) {
  return detail::document_to_json(doc).dump(2) + "\n";
}

SpaceDocument document_from_space(const FuzzySoftTopology& t, std::string_view member_prefix) {
  SpaceDocument doc{t.signature(), {}, {}, {}};
  std::size_t n = 0;
  for (const auto& h : t.opens()) {
    std::string name;
    if (h.is_phi())
      name = "phi";
    else if (h == t.signature().ambient())
      name = "ambient";
    else
      name = std::string(member_prefix) + std::to_string(++n);
    doc.topology.push_back({std::move(name), h});
  }
  return doc;
}

}  // namespace fss
