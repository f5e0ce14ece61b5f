// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fss/topology.hpp"

namespace fss {

/// Outcome of a definition-route test together with the open (or closed)
/// set that certifies it.
struct Witnessed {
  bool holds = false;
  std::optional<FuzzySoftSet> witness;
};

// Definition route: scan the family for a sandwiching member, first match in
// canonical order wins.

/// Some open h with h ⊑ g ⊑ cl(h).
Witnessed is_semiopen_def(const FuzzySoftTopology& t, const FuzzySoftSet& g);
/// Some closed k with int(k) ⊑ g ⊑ k.
Witnessed is_semiclosed_def(const FuzzySoftTopology& t, const FuzzySoftSet& g);

// Characterization route: one interior/closure round trip, no search.

/// g ⊑ cl(int(g)).
bool is_semiopen_char(const FuzzySoftTopology& t, const FuzzySoftSet& g);
/// int(cl(g)) ⊑ g.
bool is_semiclosed_char(const FuzzySoftTopology& t, const FuzzySoftSet& g);

inline bool is_semiopen(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return is_semiopen_char(t, g);
}
inline bool is_semiclosed(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return is_semiclosed_char(t, g);
}

/// Largest semiopen subset: g ⊓ cl(int(g)).
FuzzySoftSet semi_interior(const FuzzySoftTopology& t, const FuzzySoftSet& g);
/// Smallest semiclosed superset: g ⊔ int(cl(g)).
FuzzySoftSet semi_closure(const FuzzySoftTopology& t, const FuzzySoftSet& g);

struct ClassificationReport {
  FuzzySoftSet subject;
  FuzzySoftSet interior;
  FuzzySoftSet closure;
  FuzzySoftSet closure_of_interior;
  FuzzySoftSet interior_of_closure;
  bool semiopen_def = false;
  std::optional<FuzzySoftSet> semiopen_witness;
  bool semiopen_char = false;
  bool semiclosed_def = false;
  std::optional<FuzzySoftSet> semiclosed_witness;
  bool semiclosed_char = false;
  bool open = false;
  bool closed = false;

  bool routes_agree() const noexcept {
    return semiopen_def == semiopen_char && semiclosed_def == semiclosed_char;
  }
};

ClassificationReport classify(const FuzzySoftTopology& t, const FuzzySoftSet& g);

/// The four mutually equivalent statements about g.
struct EquivalenceReport {
  bool semiclosed_def = false;            // g semiclosed by definition
  bool interior_closure_inside = false;   // int(cl(g)) ⊑ g
  bool complement_inside_cl_int = false;  // g^c ⊑ cl(int(g^c))
  bool complement_semiopen_def = false;   // g^c semiopen by definition

  bool all_agree() const noexcept {
    return semiclosed_def == interior_closure_inside &&
           interior_closure_inside == complement_inside_cl_int &&
           complement_inside_cl_int == complement_semiopen_def;
  }
};

EquivalenceReport equivalence_report(const FuzzySoftTopology& t, const FuzzySoftSet& g);

/// g semiopen and g ⊑ k ⊑ cl(g) ⇒ k semiopen. Returns whether k is semiopen;
/// throws ErrorCode::Contract naming the failed inclusion when the
/// precondition does not hold.
bool sandwich_check_semiopen(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                             const FuzzySoftSet& k);
/// m semiclosed and int(m) ⊑ k ⊑ m ⇒ k semiclosed.
bool sandwich_check_semiclosed(const FuzzySoftTopology& t, const FuzzySoftSet& m,
                               const FuzzySoftSet& k);

struct PointCharacterization {
  struct Entry {
    FuzzySoftPoint point;
    /// Semiopen h with point ∈ h ⊑ g, when one exists.
    std::optional<FuzzySoftSet> neighbourhood;
  };
  bool semiopen = false;
  std::vector<Entry> points;
  /// Every point found a semiopen neighbourhood inside g.
  bool every_point_covered = false;
  /// Union of the neighbourhoods is semiopen and equals g (vacuous for Φ_E).
  bool cover_reassembles = false;

  bool holds() const noexcept {
    return semiopen == every_point_covered && (!every_point_covered || cover_reassembles);
  }
};

/// g is semiopen iff each of its points has a semiopen neighbourhood inside g.
PointCharacterization point_characterization_check(const FuzzySoftTopology& t,
                                                   const FuzzySoftSet& g);

enum class PropertyKind { Iff, Equality, Implication, Inclusion };

struct PropertyVerdict {
  std::string id;         // "i" .. "xiv"
  std::string statement;  // the identity being checked, in plain notation
  PropertyKind kind;
  /// False only for the conditional monotonicity items when g ⋢ k.
  bool applicable = true;
  bool holds = true;
  /// The two computed sides; filled for set-valued items that fail.
  std::optional<FuzzySoftSet> lhs{};
  std::optional<FuzzySoftSet> rhs{};
};

/// The fourteen semi-interior / semi-closure identities evaluated exactly on
/// the pair (g, k). Items (xi) and (xii) are read as non-strict inclusions.
std::vector<PropertyVerdict> property_suite(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                                            const FuzzySoftSet& k);

/// Semiopenness/semiclosedness of operator images.
struct OperatorImageReport {
  bool semiopen = false;
  bool semiclosed = false;
  // Only meaningful when the subject is semiopen (resp. semiclosed).
  bool interior_semiopen = true;
  bool semi_interior_semiopen = true;
  bool closure_semiclosed = true;
  bool semi_closure_semiclosed = true;
  // Whole-space claims, independent of the subject.
  bool open_closures_semiopen = true;
  bool closed_interiors_semiclosed = true;

  bool holds() const noexcept {
    return interior_semiopen && semi_interior_semiopen && closure_semiclosed &&
           semi_closure_semiclosed && open_closures_semiopen && closed_interiors_semiclosed;
  }
};

OperatorImageReport operator_image_check(const FuzzySoftTopology& t, const FuzzySoftSet& g);

}  // namespace fss
