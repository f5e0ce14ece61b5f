// SPDX-License-Identifier: Apache-2.0
#include "fss/fss.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>

#include "fss/error.hpp"
#include "fss/report.hpp"

struct fss_space {
  fss::SpaceDocument doc;
  fss::FuzzySoftTopology topology;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

fss_status status_of(fss::ErrorCode code) {
  using fss::ErrorCode;
  switch (code) {
    case ErrorCode::SignatureMismatch: return FSS_E_SIGNATURE_MISMATCH;
    case ErrorCode::Domain: return FSS_E_DOMAIN;
    case ErrorCode::Contract: return FSS_E_CONTRACT;
    case ErrorCode::Malformed: return FSS_E_MALFORMED;
    case ErrorCode::DuplicateName: return FSS_E_DUPLICATE_NAME;
    case ErrorCode::GradeOutOfRange: return FSS_E_GRADE_OUT_OF_RANGE;
    case ErrorCode::SubsetViolation: return FSS_E_SUBSET_VIOLATION;
    case ErrorCode::UnknownName: return FSS_E_UNKNOWN_NAME;
    case ErrorCode::EnumerationCap: return FSS_E_ENUMERATION_CAP;
    case ErrorCode::UnknownProperty: return FSS_E_UNKNOWN_PROPERTY;
    case ErrorCode::Overflow: return FSS_E_OVERFLOW;
    case ErrorCode::Io: return FSS_E_IO;
  }
  return FSS_E_INTERNAL;
}

// Runs body, which returns the status and writes the text; any exception is
// turned into a status plus message.
template <typename Body>
fss_status guarded(char** out, Body&& body) {
  if (out) *out = nullptr;
  try {
    return body();
  } catch (const fss::Error& e) {
    put(out, e.what());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    put(out, "out of memory");
    return FSS_E_INTERNAL;
  } catch (const std::exception& e) {
    put(out, e.what());
    return FSS_E_INTERNAL;
  }
}

fss::Format format_of(fss_format f) {
  return f == FSS_FORMAT_JSON ? fss::Format::Json : fss::Format::Text;
}

fss_status require(const void* p, const char* what, char** out) {
  if (p) return FSS_OK;
  put(out, std::string(what) + " must not be null");
  return FSS_E_INVALID_ARGUMENT;
}

fss_status make_space(fss::SpaceDocument doc, fss_space** space) {
  auto topology = doc.to_topology();
  *space = new fss_space{std::move(doc), std::move(topology)};
  return FSS_OK;
}

}  // namespace

extern "C" {

const char* fss_status_name(fss_status status) {
  switch (status) {
    case FSS_OK: return "ok";
    case FSS_FAILED: return "failed";
    case FSS_E_MALFORMED: return "malformed";
    case FSS_E_DUPLICATE_NAME: return "duplicate-name";
    case FSS_E_GRADE_OUT_OF_RANGE: return "grade-out-of-range";
    case FSS_E_SUBSET_VIOLATION: return "subset-violation";
    case FSS_E_UNKNOWN_NAME: return "unknown-name";
    case FSS_E_SIGNATURE_MISMATCH: return "signature-mismatch";
    case FSS_E_DOMAIN: return "domain";
    case FSS_E_CONTRACT: return "contract";
    case FSS_E_ENUMERATION_CAP: return "enumeration-cap";
    case FSS_E_UNKNOWN_PROPERTY: return "unknown-property";
    case FSS_E_OVERFLOW: return "overflow";
    case FSS_E_IO: return "io";
    case FSS_E_INVALID_ARGUMENT: return "invalid-argument";
    case FSS_E_INTERNAL: return "internal";
  }
  return "unknown";
}

int fss_exit_code(fss_status status) {
  if (status == FSS_OK) return 0;
  if (status == FSS_FAILED) return 1;
  return 2;
}

void fss_string_free(char* s) { std::free(s); }

fss_status fss_space_parse(const char* text, fss_space** space, char** error) {
  return guarded(error, [&] {
    if (auto s = require(text, "text", error)) return s;
    if (auto s = require(space, "space", error)) return s;
    return make_space(fss::parse_document(text), space);
  });
}

fss_status fss_space_load(const char* path, fss_space** space, char** error) {
  return guarded(error, [&] {
    if (auto s = require(path, "path", error)) return s;
    if (auto s = require(space, "space", error)) return s;
    return make_space(fss::load_document(path), space);
  });
}

void fss_space_free(fss_space* space) { delete space; }

size_t fss_space_member_count(const fss_space* space) {
  return space ? space->doc.topology.size() : 0;
}

fss_status fss_space_serialize(const fss_space* space, char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    put(out, fss::serialize_document(space->doc));
    return FSS_OK;
  });
}

fss_status fss_validate(const fss_space* space, fss_format format, char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    const auto report = fss::validate(space->doc.members(), space->doc.signature);
    put(out, fss::render_validation(space->doc, report, format_of(format)));
    return report.passed() ? FSS_OK : FSS_FAILED;
  });
}

fss_status fss_classify(const fss_space* space, const char* set_name, fss_format format,
                        char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    if (auto s = require(set_name, "set name", out)) return s;
    const auto g = space->doc.find(set_name);
    const auto r = fss::classify(space->topology, g);
    const auto eq = fss::equivalence_report(space->topology, g);
    put(out, fss::render_classification(space->doc, set_name, r, eq, format_of(format)));
    return FSS_OK;
  });
}

fss_status fss_apply(const fss_space* space, fss_operator op, const char* set_name,
                     fss_format format, char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    if (auto s = require(set_name, "set name", out)) return s;
    const auto g = space->doc.find(set_name);
    const auto& t = space->topology;
    std::string label;
    std::optional<fss::FuzzySoftSet> result;
    switch (op) {
      case FSS_OP_INTERIOR: label = "int"; result = t.interior(g); break;
      case FSS_OP_CLOSURE: label = "cl"; result = t.closure(g); break;
      case FSS_OP_SEMI_INTERIOR: label = "sint"; result = fss::semi_interior(t, g); break;
      case FSS_OP_SEMI_CLOSURE: label = "scl"; result = fss::semi_closure(t, g); break;
    }
    if (!result) {
      put(out, "unknown operator");
      return FSS_E_INVALID_ARGUMENT;
    }
    put(out, fss::render_set_result(space->doc, label, set_name, *result, format_of(format)));
    return FSS_OK;
  });
}

fss_status fss_properties(const fss_space* space, const char* g_name, const char* k_name,
                          fss_format format, char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    if (auto s = require(g_name, "g", out)) return s;
    if (auto s = require(k_name, "k", out)) return s;
    const auto items = fss::property_suite(space->topology, space->doc.find(g_name),
                                           space->doc.find(k_name));
    put(out, fss::render_properties(space->doc, g_name, k_name, items, format_of(format)));
    for (const auto& v : items)
      if (v.applicable && !v.holds) return FSS_FAILED;
    return FSS_OK;
  });
}

fss_status fss_points(const fss_space* space, const char* set_name, fss_format format,
                      char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    if (auto s = require(set_name, "set name", out)) return s;
    const auto r = fss::point_characterization_check(space->topology, space->doc.find(set_name));
    put(out, fss::render_points(space->doc, set_name, r, format_of(format)));
    return r.holds() ? FSS_OK : FSS_FAILED;
  });
}

fss_status fss_repair(const fss_space* space, char** out) {
  return guarded(out, [&] {
    if (auto s = require(space, "space", out)) return s;
    const auto& doc = space->doc;
    const auto closed = fss::generate_from_subbasis(doc.members(), doc.signature);
    fss::SpaceDocument repaired{doc.signature, {}, doc.sets, {}};
    std::set<std::string> used;
    for (const auto& n : doc.topology) used.insert(n.name);
    for (const auto& n : doc.sets) used.insert(n.name);
    std::size_t fresh = 0;
    for (const auto& h : closed.opens()) {
      if (auto name = doc.name_of(h); name && used.count(*name)) {
        repaired.topology.push_back({*name, h});
        continue;
      }
      if (h.is_phi() || h == doc.signature.ambient()) {
        repaired.topology.push_back({h.is_phi() ? "phi" : "ambient", h});
        continue;
      }
      std::string name;
      do name = "C" + std::to_string(++fresh);
      while (used.count(name));
      repaired.topology.push_back({name, h});
    }
    put(out, fss::serialize_document(repaired));
    return FSS_OK;
  });
}

void fss_gen_options_init(fss_gen_options* o) {
  if (o) *o = {1, 3, 2, 4, 3};
}

fss_status fss_gen(const fss_gen_options* o, char** out) {
  return guarded(out, [&] {
    if (auto s = require(o, "options", out)) return s;
    const auto space = fss::gen_space(o->seed, {o->universe, o->parameters,
                                                fss::GridSpec{static_cast<std::int64_t>(o->grid)},
                                                o->subbasis});
    put(out, fss::serialize_document(fss::document_from_space(space.topology)));
    return FSS_OK;
  });
}

void fss_search_options_init(fss_search_options* o) {
  if (o) *o = {"semiopen-meet", 100, 1, 3, 1, 1, 2};
}

fss_status fss_search(const fss_search_options* o, fss_format format, char** out) {
  return guarded(out, [&] {
    if (auto s = require(o, "options", out)) return s;
    if (auto s = require(o->property, "property", out)) return s;
    fss::SearchOptions opts;
    opts.property = fss::parse_search_property(o->property);
    opts.budget = o->budget;
    opts.seed = o->seed;
    opts.universe = o->universe;
    opts.parameters = o->parameters;
    opts.grid = {static_cast<std::int64_t>(o->grid)};
    opts.max_subbasis = o->max_subbasis;
    const auto r = fss::search_counterexample(opts);
    put(out, fss::render_search(r, format_of(format)));
    return r.status == fss::SearchStatus::Found ? FSS_FAILED : FSS_OK;
  });
}

void fss_fuzz_options_init(fss_fuzz_options* o) {
  if (o) *o = {1, 1000, 3, 2, 4, 3};
}

fss_status fss_fuzz(const fss_fuzz_options* o, fss_format format, char** out) {
  return guarded(out, [&] {
    if (auto s = require(o, "options", out)) return s;
    fss::FuzzOptions opts;
    opts.seed = o->seed;
    opts.samples = o->samples;
    opts.max_universe = o->max_universe;
    opts.max_parameters = o->max_parameters;
    opts.max_grid = o->max_grid;
    opts.max_subbasis = o->max_subbasis;
    const auto r = fss::fuzz_theorems(opts);
    put(out, fss::render_fuzz(r, format_of(format)));
    return r.passed() ? FSS_OK : FSS_FAILED;
  });
}

}  // extern "C"
