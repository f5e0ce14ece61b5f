// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fss/grade.hpp"

namespace fss {

class FuzzySoftSet;

/// The universe U, the parameter set E and the ambient set f_E.
///
/// A signature is a cheap handle over immutable shared data, so every set
/// built on it can carry its own copy. Cells are laid out parameter-major:
/// cell(e, x) = e * |U| + x.
class SpaceSignature {
 public:
  /// Throws ErrorCode::Malformed on empty or duplicated names, and when the
  /// ambient grade list does not have |E| * |U| entries.
  SpaceSignature(std::vector<std::string> universe, std::vector<std::string> parameters,
                 std::vector<Grade> ambient);

  /// Signature whose ambient set is 1 everywhere.
  static SpaceSignature crisp(std::vector<std::string> universe,
                              std::vector<std::string> parameters);

  const std::vector<std::string>& universe() const noexcept { return data_->universe; }
  const std::vector<std::string>& parameters() const noexcept { return data_->parameters; }
  std::size_t objects() const noexcept { return data_->universe.size(); }
  std::size_t parameter_count() const noexcept { return data_->parameters.size(); }
  std::size_t cells() const noexcept { return data_->ambient.size(); }
  std::size_t cell(std::size_t parameter, std::size_t object) const noexcept {
    return parameter * objects() + object;
  }
  const std::vector<Grade>& ambient_grades() const noexcept { return data_->ambient; }

  FuzzySoftSet ambient() const;
  /// The all-zero set Φ_E.
  FuzzySoftSet phi() const;

  /// Same names in the same order and the same ambient grades.
  friend bool operator==(const SpaceSignature& a, const SpaceSignature& b) noexcept;

 private:
  struct Data {
    std::vector<std::string> universe;
    std::vector<std::string> parameters;
    std::vector<Grade> ambient;
  };
  std::shared_ptr<const Data> data_;
};

/// Parameter-indexed fuzzy memberships, zero-extended to the whole of E.
class FuzzySoftSet {
 public:
  /// Throws ErrorCode::Malformed when the grade count does not match.
  FuzzySoftSet(SpaceSignature signature, std::vector<Grade> grades);

  const SpaceSignature& signature() const noexcept { return signature_; }
  std::span<const Grade> grades() const noexcept { return grades_; }
  const Grade& at(std::size_t cell) const noexcept { return grades_[cell]; }
  const Grade& at(std::size_t parameter, std::size_t object) const noexcept {
    return grades_[signature_.cell(parameter, object)];
  }

  bool is_phi() const noexcept;
  /// Every grade is bounded by the ambient grade of its cell.
  bool within_ambient() const noexcept;
  /// Parameters with at least one nonzero grade (the carrier A ⊆ E).
  std::vector<std::size_t> support() const;

  /// Grade vectors compared exactly; signatures must match too.
  friend bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b) noexcept;

 private:
  SpaceSignature signature_;
  std::vector<Grade> grades_;
};

/// Canonical member order: lexicographic over cells, Φ_E first.
bool canonical_less(const FuzzySoftSet& a, const FuzzySoftSet& b) noexcept;

/// Single-parameter fuzzy soft set with a nonzero membership.
class FuzzySoftPoint {
 public:
  /// Throws ErrorCode::Domain if membership is identically zero.
  FuzzySoftPoint(SpaceSignature signature, std::size_t parameter, std::vector<Grade> membership);

  const SpaceSignature& signature() const noexcept { return signature_; }
  std::size_t parameter() const noexcept { return parameter_; }
  std::span<const Grade> membership() const noexcept { return membership_; }

  FuzzySoftSet as_set() const;

  friend bool operator==(const FuzzySoftPoint&, const FuzzySoftPoint&) = default;

 private:
  SpaceSignature signature_;
  std::size_t parameter_;
  std::vector<Grade> membership_;
};

/// Throws ErrorCode::SignatureMismatch naming the differing dimension.
void require_same_signature(const SpaceSignature& a, const SpaceSignature& b);

bool subset_leq(const FuzzySoftSet& g, const FuzzySoftSet& k);
FuzzySoftSet unite(const FuzzySoftSet& g, const FuzzySoftSet& k);
FuzzySoftSet intersect(const FuzzySoftSet& g, const FuzzySoftSet& k);
/// Throws ErrorCode::Contract on an empty list.
FuzzySoftSet unite_all(std::span<const FuzzySoftSet> sets);
FuzzySoftSet intersect_all(std::span<const FuzzySoftSet> sets);

/// Relative complement ambient − g. Throws ErrorCode::Domain with the first
/// offending cell when g is not inside the ambient set.
FuzzySoftSet complement(const FuzzySoftSet& g);

bool point_in(const FuzzySoftPoint& p, const FuzzySoftSet& h);

/// One point per nonzero parameter slice, in parameter order.
std::vector<FuzzySoftPoint> decompose_points(const FuzzySoftSet& g);

/// Human-oriented cell label such as "(e1,h2)".
std::string cell_label(const SpaceSignature& sig, std::size_t cell);

}  // namespace fss
