// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fss {

enum class ErrorCode {
  SignatureMismatch,
  Domain,
  Contract,
  Malformed,
  DuplicateName,
  GradeOutOfRange,
  SubsetViolation,
  UnknownName,
  EnumerationCap,
  UnknownProperty,
  Overflow,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fss
