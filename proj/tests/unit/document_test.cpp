// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "doctest.h"
#include "fss/error.hpp"
#include "support.hpp"

using namespace fss;

namespace {

const char* const kMinimal = R"({
  "universe": ["x", "y"],
  "parameters": ["e"],
  "ambient": {"e": {"x": "1", "y": "1/2"}},
  "topology": {"phi": "phi", "ambient": "ambient", "T1": {"e": {"x": "0.25"}}},
  "sets": {"g": {"e": {"y": "1/3"}}}
})";

struct Failure {
  ErrorCode code;
  std::string message;
};

Failure parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("document unexpectedly parsed");
  return {ErrorCode::Io, ""};
}

std::string with(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("minimal document") {
  const auto doc = parse_document(kMinimal);
  CHECK(doc.signature.universe() == std::vector<std::string>{"x", "y"});
  CHECK(doc.topology.size() == 3);
  CHECK(doc.topology[0].name == "phi");
  CHECK(doc.find("T1").at(0, 0) == Grade(1, 4));
  CHECK(doc.find("T1").at(0, 1).is_zero());
  CHECK(doc.find("g").at(0, 1) == Grade(1, 3));
  CHECK(doc.find("ambient") == doc.signature.ambient());
  CHECK(doc.name_of(doc.signature.phi()) == "phi");
  CHECK(doc.claims.empty());
  CHECK(doc.to_topology().validate().passed());
}

TEST_CASE("canonical serialization") {
  const auto text = serialize_document(parse_document(kMinimal));
  CHECK(text.back() == '\n');
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK(text.find("\"0.25\"") != std::string::npos);
  CHECK(text.find("\"phi\": \"phi\"") != std::string::npos);
  CHECK(serialize_document(parse_document(text)) == text);
}

TEST_CASE("input errors carry a code and the JSON path") {
  auto f = parse_failure(with(kMinimal, "\"0.25\"", "\"1.2\""));
  CHECK(f.code == ErrorCode::GradeOutOfRange);
  CHECK(f.message.find("topology.T1.e.x") != std::string::npos);

  f = parse_failure(with(kMinimal, "\"1/3\"", "\"0.75\""));
  CHECK(f.code == ErrorCode::SubsetViolation);
  CHECK(f.message.find("sets.g.e.y") != std::string::npos);

  f = parse_failure(with(kMinimal, "\"0.25\"", "0.25"));
  CHECK(f.code == ErrorCode::Malformed);

  f = parse_failure(with(kMinimal, "\"sets\"", "\"extra\": 1, \"sets\""));
  CHECK(f.code == ErrorCode::Malformed);
  CHECK(f.message.find("extra") != std::string::npos);

  f = parse_failure(with(kMinimal, "\"T1\"", "\"T1\": \"phi\", \"T1\""));
  CHECK(f.code == ErrorCode::DuplicateName);
  CHECK(f.message.find("topology.T1") != std::string::npos);

  f = parse_failure(with(kMinimal, "\"g\"", "\"T1\""));
  CHECK(f.code == ErrorCode::DuplicateName);

  f = parse_failure(with(kMinimal, "\"g\"", "\"phi\""));
  CHECK(f.code == ErrorCode::DuplicateName);

  f = parse_failure(with(kMinimal, "\"phi\": \"phi\"", "\"phi\": \"ambient\""));
  CHECK(f.code == ErrorCode::DuplicateName);

  f = parse_failure(with(kMinimal, "{\"x\": \"0.25\"}", "{\"z\": \"0.25\"}"));
  CHECK(f.code == ErrorCode::UnknownName);
  CHECK(f.message.find("topology.T1.e.z") != std::string::npos);

  f = parse_failure(with(kMinimal, "[\"x\", \"y\"]", "[\"x\", \"x\"]"));
  CHECK(f.code == ErrorCode::DuplicateName);

  f = parse_failure(with(kMinimal, "\"topology\"", "\"topologies\""));
  CHECK(f.code == ErrorCode::Malformed);

  f = parse_failure("{\"universe\": [");
  CHECK(f.code == ErrorCode::Malformed);
  CHECK(f.message.find("syntax error") != std::string::npos);

  CHECK(parse_failure("[]").code == ErrorCode::Malformed);
}

TEST_CASE("unknown names and missing files") {
  const auto doc = parse_document(kMinimal);
  try {
    doc.find("nope");
    FAIL("expected unknown name");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
  try {
    load_document("/nonexistent/space.json");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("claims") {
  const auto& doc = test::example();
  REQUIRE(doc.claims.topology_valid);
  CHECK(*doc.claims.topology_valid);
  CHECK(doc.claims.sets.at("g_E").at("semiopen"));
  CHECK(test::repaired_example().claims.empty());
  auto f = parse_failure(with(kMinimal, "\"sets\"", "\"claims\": {\"sets\": {\"g\": {\"pretty\": true}}}, \"sets\""));
  CHECK(f.code == ErrorCode::Malformed);
}

TEST_CASE("worked example keeps document order and round-trips") {
  const auto& doc = test::example();
  REQUIRE(doc.topology.size() == 11);
  CHECK(doc.topology[2].name == "T3");
  CHECK(doc.topology[10].name == "T11");
  const auto again = parse_document(serialize_document(doc));
  CHECK(again.to_topology() == doc.to_topology());
  CHECK(again.find("g_E") == doc.find("g_E"));
  CHECK(serialize_document(again) == serialize_document(doc));
}

TEST_CASE("property: generated documents round-trip byte for byte") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(sample_seed(11, i));
    GenSpaceOptions o;
    o.universe = 1 + rng.below(3);
    o.parameters = 1 + rng.below(3);
    o.grid = GridSpec{static_cast<std::int64_t>(1 + rng.below(12))};
    o.subbasis = rng.below(4);
    const auto space = gen_space(rng.next(), o);
    const auto doc = document_from_space(space.topology);
    const auto text = serialize_document(doc);
    const auto back = parse_document(text);
    CHECK(back.to_topology() == space.topology);
    CHECK(serialize_document(back) == text);
  }
}
