// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fss/algebra.hpp"

namespace fss {

enum class Axiom {
  ContainsPhi,      // (i) Φ_E ∈ τ
  ContainsAmbient,  // (i) f_E ∈ τ
  MeetClosed,       // (ii) binary intersections stay in τ
  JoinClosed,       // (iii) unions stay in τ; binary suffices for a finite family
};

std::string_view axiom_id(Axiom a) noexcept;

struct Violation {
  Axiom axiom;
  /// Indices into the validated candidate list; empty for axiom (i).
  std::vector<std::size_t> witnesses;
  /// The set that should have been a member and is not.
  FuzzySoftSet missing;
};

struct ValidationReport {
  bool passed() const noexcept { return violations.empty(); }
  std::size_t members = 0;
  std::size_t distinct_members = 0;
  std::vector<Violation> violations;
};

/// Checks the axioms on an explicit candidate family. Every member must lie
/// inside the ambient set, otherwise ErrorCode::SubsetViolation is raised
/// before any axiom is examined. Violations come out in a fixed order:
/// axiom (i) first, then pairs (i, j), i < j, meet before join.
ValidationReport validate(std::span<const FuzzySoftSet> candidate, const SpaceSignature& sig);

/// A finite family of open fuzzy soft sets.
///
/// Construction deduplicates by value and sorts members canonically. It does
/// not enforce the axioms: a family that fails validate() can still be
/// queried so that inconsistent input can be audited rather than rejected.
class FuzzySoftTopology {
 public:
  FuzzySoftTopology(SpaceSignature sig, std::span<const FuzzySoftSet> opens);

  /// Same as the constructor but throws ErrorCode::Contract on a family that
  /// does not pass validate().
  static FuzzySoftTopology checked(SpaceSignature sig, std::span<const FuzzySoftSet> opens);

  const SpaceSignature& signature() const noexcept { return sig_; }
  const std::vector<FuzzySoftSet>& opens() const noexcept { return opens_; }
  /// Complements of the opens, deduplicated and in canonical order.
  const std::vector<FuzzySoftSet>& closed_family() const noexcept { return closed_; }

  bool is_open(const FuzzySoftSet& g) const;
  bool is_closed(const FuzzySoftSet& g) const;

  /// Join of every open subset of g.
  FuzzySoftSet interior(const FuzzySoftSet& g) const;
  /// Meet of every closed superset of g.
  FuzzySoftSet closure(const FuzzySoftSet& g) const;

  ValidationReport validate() const { return fss::validate(opens_, sig_); }

  friend bool operator==(const FuzzySoftTopology& a, const FuzzySoftTopology& b) noexcept {
    return a.sig_ == b.sig_ && a.opens_ == b.opens_;
  }

 private:
  void require_inside(const FuzzySoftSet& g) const;

  SpaceSignature sig_;
  std::vector<FuzzySoftSet> opens_;
  std::vector<FuzzySoftSet> closed_;
};

/// Smallest topology containing the family: adds Φ_E and f_E, then closes
/// under binary meets and joins until nothing new appears.
FuzzySoftTopology generate_from_subbasis(std::span<const FuzzySoftSet> family,
                                         const SpaceSignature& sig);

}  // namespace fss
