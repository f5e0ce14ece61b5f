// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <limits>

#include "doctest.h"
#include "fss/error.hpp"
#include "fss/explorer.hpp"
#include "fss/grade.hpp"

using fss::ErrorCode;
using fss::Grade;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const fss::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("grade parse accepts decimals, integers and fractions") {
  CHECK(Grade::parse("0") == Grade::zero());
  CHECK(Grade::parse("1") == Grade::one());
  CHECK(Grade::parse("1.0") == Grade::one());
  CHECK(Grade::parse("0.25") == Grade(1, 4));
  CHECK(Grade::parse("3/8") == Grade(3, 8));
  CHECK(Grade::parse("2/4") == Grade(1, 2));
  CHECK(Grade::parse("0.50000000000000000000") == Grade(1, 2));
  CHECK(Grade::parse("00.1") == Grade(1, 10));
}

TEST_CASE("grade parse rejects bad text with the right code") {
  CHECK(code_of([] { Grade::parse("1.2"); }) == ErrorCode::GradeOutOfRange);
  CHECK(code_of([] { Grade::parse("2"); }) == ErrorCode::GradeOutOfRange);
  CHECK(code_of([] { Grade::parse("-0.1"); }) == ErrorCode::GradeOutOfRange);
  CHECK(code_of([] { Grade::parse("5/4"); }) == ErrorCode::GradeOutOfRange);
  CHECK(code_of([] { Grade::parse(""); }) == ErrorCode::Malformed);
  CHECK(code_of([] { Grade::parse("0.x"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { Grade::parse("1/0"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { Grade::parse("0.1234567890123456789"); }) == ErrorCode::Overflow);
}

TEST_CASE("grade serialization") {
  CHECK(Grade::zero().to_string() == "0");
  CHECK(Grade::one().to_string() == "1");
  CHECK(Grade(1, 4).to_string() == "0.25");
  CHECK(Grade(1, 3).to_string() == "1/3");
  CHECK(Grade(7, 40).to_string() == "0.175");
  CHECK(Grade(1, 1024).to_string() == "0.0009765625");
  CHECK(Grade(1, std::int64_t{1} << 62).to_string() == "1/4611686018427387904");
}

TEST_CASE("grade ordering and subtraction are exact") {
  CHECK(Grade(1, 3) < Grade(34, 100));
  CHECK(Grade(1, 3) > Grade(33, 100));
  CHECK(Grade(1, 2).minus(Grade(1, 3)) == Grade(1, 6));
  CHECK(Grade::parse("0.8").minus(Grade::parse("0.4")) == Grade::parse("0.4"));
  CHECK(code_of([] { Grade(1, 3).minus(Grade(1, 2)); }) == ErrorCode::Domain);
  CHECK(fss::min(Grade(1, 3), Grade(1, 2)) == Grade(1, 3));
  CHECK(fss::max(Grade(1, 3), Grade(1, 2)) == Grade(1, 2));
}

TEST_CASE("grade subtraction overflow is reported, not wrapped") {
  const std::int64_t p = 1'000'000'007, q = 998'244'353, r = 1'000'000'009;
  const Grade a(1, p * 3), b(1, q * r);
  CHECK(code_of([&] { a.minus(b); }) == ErrorCode::Overflow);
}

TEST_CASE("grid helpers") {
  CHECK(Grade(1, 2).grid_floor(3) == 1);
  CHECK(Grade(2, 3).grid_floor(3) == 2);
  CHECK(Grade(1, 2).on_grid_of(4));
  CHECK_FALSE(Grade(1, 3).on_grid_of(4));
}

TEST_CASE("property: parse(to_string(x)) == x on random rationals") {
  fss::Rng rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const auto den = static_cast<std::int64_t>(1 + rng.below(1'000'000));
    const auto num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den) + 1));
    const Grade g(num, den);
    REQUIRE(Grade::parse(g.to_string()) == g);
  }
}
