// SPDX-License-Identifier: Apache-2.0
#include "fss/topology.hpp"

#include <algorithm>
#include <set>

#include "fss/error.hpp"

namespace fss {
namespace {

void require_family_inside(std::span<const FuzzySoftSet> family, const SpaceSignature& sig) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_signature(family[i].signature(), sig);
    if (!family[i].within_ambient())
      throw Error(ErrorCode::SubsetViolation,
                  "member #" + std::to_string(i) + " is not a subset of the ambient set");
  }
}

std::vector<FuzzySoftSet> canonical(std::vector<FuzzySoftSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

bool contains_sorted(const std::vector<FuzzySoftSet>& sorted, const FuzzySoftSet& g) {
  return std::binary_search(sorted.begin(), sorted.end(), g, canonical_less);
}

}  // namespace

std::string_view axiom_id(Axiom a) noexcept {
  switch (a) {
    case Axiom::ContainsPhi: return "contains-phi";
    case Axiom::ContainsAmbient: return "contains-ambient";
    case Axiom::MeetClosed: return "closed-under-intersection";
    case Axiom::JoinClosed: return "closed-under-union";
  }
  return "unknown";
}

ValidationReport validate(std::span<const FuzzySoftSet> candidate, const SpaceSignature& sig) {
  require_family_inside(candidate, sig);
  const auto members = canonical({candidate.begin(), candidate.end()});

  ValidationReport report;
  report.members = candidate.size();
  report.distinct_members = members.size();
  if (!contains_sorted(members, sig.phi()))
    report.violations.push_back({Axiom::ContainsPhi, {}, sig.phi()});
  if (!contains_sorted(members, sig.ambient()))
    report.violations.push_back({Axiom::ContainsAmbient, {}, sig.ambient()});
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      auto m = intersect(candidate[i], candidate[j]);
      if (!contains_sorted(members, m))
        report.violations.push_back({Axiom::MeetClosed, {i, j}, std::move(m)});
      auto u = unite(candidate[i], candidate[j]);
      if (!contains_sorted(members, u))
        report.violations.push_back({Axiom::JoinClosed, {i, j}, std::move(u)});
    }
  }
  return report;
}

FuzzySoftTopology::FuzzySoftTopology(SpaceSignature sig, std::span<const FuzzySoftSet> opens)
    : sig_(std::move(sig)) {
  require_family_inside(opens, sig_);
  opens_ = canonical({opens.begin(), opens.end()});
  std::vector<FuzzySoftSet> closed;
  closed.reserve(opens_.size());
  for (const auto& h : opens_) closed.push_back(complement(h));
  closed_ = canonical(std::move(closed));
}

FuzzySoftTopology FuzzySoftTopology::checked(SpaceSignature sig,
                                             std::span<const FuzzySoftSet> opens) {
  FuzzySoftTopology t(std::move(sig), opens);
  if (const auto r = t.validate(); !r.passed())
    throw Error(ErrorCode::Contract, "family violates axiom " +
                                         std::string(axiom_id(r.violations.front().axiom)));
  return t;
}

void FuzzySoftTopology::require_inside(const FuzzySoftSet& g) const {
  require_same_signature(g.signature(), sig_);
  if (!g.within_ambient())
    throw Error(ErrorCode::SubsetViolation, "set is not a subset of the ambient set");
}

bool FuzzySoftTopology::is_open(const FuzzySoftSet& g) const {
  require_same_signature(g.signature(), sig_);
  return contains_sorted(opens_, g);
}

bool FuzzySoftTopology::is_closed(const FuzzySoftSet& g) const {
  require_same_signature(g.signature(), sig_);
  return contains_sorted(closed_, g);
}

FuzzySoftSet FuzzySoftTopology::interior(const FuzzySoftSet& g) const {
  require_inside(g);
  auto acc = sig_.phi();
  for (const auto& h : opens_)
    if (subset_leq(h, g)) acc = unite(acc, h);
  return acc;
}

FuzzySoftSet FuzzySoftTopology::closure(const FuzzySoftSet& g) const {
  require_inside(g);
  auto acc = sig_.ambient();
  for (const auto& k : closed_)
    if (subset_leq(g, k)) acc = intersect(acc, k);
  return acc;
}

FuzzySoftTopology generate_from_subbasis(std::span<const FuzzySoftSet> family,
                                         const SpaceSignature& sig) {
  require_family_inside(family, sig);
  std::set<FuzzySoftSet, decltype(&canonical_less)> seen(&canonical_less);
  std::vector<FuzzySoftSet> members;
  const auto add = [&](FuzzySoftSet s) {
    if (seen.insert(s).second) members.push_back(std::move(s));
  };
  add(sig.phi());
  add(sig.ambient());
  for (const auto& s : family) add(s);

  // Semi-naive fixpoint: a pair can only yield something new if one side
  // joined the family after the previous round.
  std::size_t settled = 0;
  while (settled < members.size()) {
    const std::size_t end = members.size();
    for (std::size_t i = settled; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        add(intersect(members[i], members[j]));
        add(unite(members[i], members[j]));
      }
    }
    settled = end;
  }
  return FuzzySoftTopology(sig, members);
}

}  // namespace fss
