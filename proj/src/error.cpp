// SPDX-License-Identifier: Apache-2.0
#include "fss/error.hpp"

namespace fss {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SignatureMismatch: return "signature-mismatch";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Contract: return "contract";
    case ErrorCode::Malformed: return "malformed";
    case ErrorCode::DuplicateName: return "duplicate-name";
    case ErrorCode::GradeOutOfRange: return "grade-out-of-range";
    case ErrorCode::SubsetViolation: return "subset-violation";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::EnumerationCap: return "enumeration-cap";
    case ErrorCode::UnknownProperty: return "unknown-property";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace fss
