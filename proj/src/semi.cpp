// SPDX-License-Identifier: Apache-2.0
#include "fss/semi.hpp"

#include "fss/error.hpp"

namespace fss {

Witnessed is_semiopen_def(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  for (const auto& h : t.opens()) {
    if (subset_leq(h, g) && subset_leq(g, t.closure(h))) return {true, h};
  }
  return {};
}

Witnessed is_semiclosed_def(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  for (const auto& k : t.closed_family()) {
    if (subset_leq(g, k) && subset_leq(t.interior(k), g)) return {true, k};
  }
  return {};
}

bool is_semiopen_char(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return subset_leq(g, t.closure(t.interior(g)));
}

bool is_semiclosed_char(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return subset_leq(t.interior(t.closure(g)), g);
}

FuzzySoftSet semi_interior(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return intersect(g, t.closure(t.interior(g)));
}

FuzzySoftSet semi_closure(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return unite(g, t.interior(t.closure(g)));
}

ClassificationReport classify(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  auto in = t.interior(g);
  auto cl = t.closure(g);
  auto cl_in = t.closure(in);
  auto in_cl = t.interior(cl);
  auto so = is_semiopen_def(t, g);
  auto sc = is_semiclosed_def(t, g);
  ClassificationReport r{
      .subject = g,
      .interior = std::move(in),
      .closure = std::move(cl),
      .closure_of_interior = std::move(cl_in),
      .interior_of_closure = std::move(in_cl),
      .semiopen_def = so.holds,
      .semiopen_witness = std::move(so.witness),
      .semiclosed_def = sc.holds,
      .semiclosed_witness = std::move(sc.witness),
  };
  r.semiopen_char = subset_leq(g, r.closure_of_interior);
  r.semiclosed_char = subset_leq(r.interior_of_closure, g);
  r.open = t.is_open(g);
  r.closed = t.is_closed(g);
  return r;
}

EquivalenceReport equivalence_report(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  const auto gc = complement(g);
  return {
      .semiclosed_def = is_semiclosed_def(t, g).holds,
      .interior_closure_inside = subset_leq(t.interior(t.closure(g)), g),
      .complement_inside_cl_int = subset_leq(gc, t.closure(t.interior(gc))),
      .complement_semiopen_def = is_semiopen_def(t, gc).holds,
  };
}

bool sandwich_check_semiopen(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                             const FuzzySoftSet& k) {
  if (!is_semiopen(t, g)) throw Error(ErrorCode::Contract, "sandwich: lower set is not semiopen");
  if (!subset_leq(g, k)) throw Error(ErrorCode::Contract, "sandwich: g ⊑ k fails");
  if (!subset_leq(k, t.closure(g))) throw Error(ErrorCode::Contract, "sandwich: k ⊑ cl(g) fails");
  return is_semiopen(t, k);
}

bool sandwich_check_semiclosed(const FuzzySoftTopology& t, const FuzzySoftSet& m,
                               const FuzzySoftSet& k) {
  if (!is_semiclosed(t, m))
    throw Error(ErrorCode::Contract, "sandwich: upper set is not semiclosed");
  if (!subset_leq(k, m)) throw Error(ErrorCode::Contract, "sandwich: k ⊑ m fails");
  if (!subset_leq(t.interior(m), k))
    throw Error(ErrorCode::Contract, "sandwich: int(m) ⊑ k fails");
  return is_semiclosed(t, k);
}

PointCharacterization point_characterization_check(const FuzzySoftTopology& t,
                                                   const FuzzySoftSet& g) {
  PointCharacterization r;
  r.semiopen = is_semiopen_def(t, g).holds;
  // g itself is tried first; failing that, the largest semiopen subset is the
  // only candidate that could work, since any other one lies inside it.
  const FuzzySoftSet candidates[] = {g, semi_interior(t, g)};
  r.every_point_covered = true;
  std::optional<FuzzySoftSet> cover;
  for (auto& p : decompose_points(g)) {
    PointCharacterization::Entry entry{std::move(p), std::nullopt};
    for (const auto& h : candidates) {
      if (point_in(entry.point, h) && subset_leq(h, g) && is_semiopen_char(t, h)) {
        entry.neighbourhood = h;
        cover = cover ? unite(*cover, h) : h;
        break;
      }
    }
    r.every_point_covered = r.every_point_covered && entry.neighbourhood.has_value();
    r.points.push_back(std::move(entry));
  }
  if (!cover) {
    r.cover_reassembles = g.is_phi();
  } else {
    r.cover_reassembles = *cover == g && is_semiopen_def(t, *cover).holds;
  }
  return r;
}

namespace {

PropertyVerdict equality(std::string id, std::string statement, FuzzySoftSet lhs,
                         FuzzySoftSet rhs) {
  PropertyVerdict v{std::move(id), std::move(statement), PropertyKind::Equality};
  v.holds = lhs == rhs;
  if (!v.holds) {
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
  }
  return v;
}

PropertyVerdict inclusion(std::string id, std::string statement, FuzzySoftSet lhs,
                          FuzzySoftSet rhs, PropertyKind kind = PropertyKind::Inclusion) {
  PropertyVerdict v{std::move(id), std::move(statement), kind};
  v.holds = subset_leq(lhs, rhs);
  if (!v.holds) {
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
  }
  return v;
}

}  // namespace

std::vector<PropertyVerdict> property_suite(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                                            const FuzzySoftSet& k) {
  require_same_signature(g.signature(), k.signature());
  const auto scl = [&](const FuzzySoftSet& s) { return semi_closure(t, s); };
  const auto sint = [&](const FuzzySoftSet& s) { return semi_interior(t, s); };
  const auto& sig = t.signature();
  const auto phi = sig.phi();
  const auto amb = sig.ambient();
  const auto scl_g = scl(g);
  const auto sint_g = sint(g);

  std::vector<PropertyVerdict> out;
  out.reserve(14);

  {
    PropertyVerdict v{"i", "g semiclosed <=> g = fsscl(g)", PropertyKind::Iff};
    v.holds = is_semiclosed_def(t, g).holds == (g == scl_g);
    out.push_back(std::move(v));
  }
  {
    PropertyVerdict v{"ii", "g semiopen <=> g = fssint(g)", PropertyKind::Iff};
    v.holds = is_semiopen_def(t, g).holds == (g == sint_g);
    out.push_back(std::move(v));
  }
  out.push_back(equality("iii", "fsscl(g)^c = fssint(g^c)", complement(scl_g),
                         sint(complement(g))));
  out.push_back(equality("iv", "fssint(g)^c = fsscl(g^c)", complement(sint_g),
                         scl(complement(g))));
  {
    auto v = inclusion("v", "g <= k => fssint(g) <= fssint(k)", sint_g, sint(k),
                       PropertyKind::Implication);
    if (!subset_leq(g, k)) v = {v.id, v.statement, v.kind, false};
    out.push_back(std::move(v));
  }
  {
    auto v = inclusion("vi", "g <= k => fsscl(g) <= fsscl(k)", scl_g, scl(k),
                       PropertyKind::Implication);
    if (!subset_leq(g, k)) v = {v.id, v.statement, v.kind, false};
    out.push_back(std::move(v));
  }
  {
    PropertyVerdict v{"vii", "fsscl(phi) = phi and fsscl(ambient) = ambient",
                      PropertyKind::Equality};
    v.holds = scl(phi) == phi && scl(amb) == amb;
    out.push_back(std::move(v));
  }
  {
    PropertyVerdict v{"viii", "fssint(phi) = phi and fssint(ambient) = ambient",
                      PropertyKind::Equality};
    v.holds = sint(phi) == phi && sint(amb) == amb;
    out.push_back(std::move(v));
  }
  out.push_back(equality("ix", "fsscl(g | k) = fsscl(g) | fsscl(k)", scl(unite(g, k)),
                         unite(scl_g, scl(k))));
  out.push_back(equality("x", "fssint(g & k) = fssint(g) & fssint(k)", sint(intersect(g, k)),
                         intersect(sint_g, sint(k))));
  out.push_back(inclusion("xi", "fsscl(g & k) <= fsscl(g) & fsscl(k)", scl(intersect(g, k)),
                          intersect(scl_g, scl(k))));
  out.push_back(inclusion("xii", "fssint(g | k) <= fssint(g) | fssint(k)", sint(unite(g, k)),
                          unite(sint_g, sint(k))));
  out.push_back(equality("xiii", "fsscl(fsscl(g)) = fsscl(g)", scl(scl_g), scl_g));
  out.push_back(equality("xiv", "fssint(fssint(g)) = fssint(g)", sint(sint_g), sint_g));
  return out;
}

OperatorImageReport operator_image_check(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  OperatorImageReport r;
  r.semiopen = is_semiopen(t, g);
  r.semiclosed = is_semiclosed(t, g);
  if (r.semiopen) {
    r.interior_semiopen = is_semiopen_def(t, t.interior(g)).holds;
    r.semi_interior_semiopen = is_semiopen_def(t, semi_interior(t, g)).holds;
  }
  if (r.semiclosed) {
    r.closure_semiclosed = is_semiclosed_def(t, t.closure(g)).holds;
    r.semi_closure_semiclosed = is_semiclosed_def(t, semi_closure(t, g)).holds;
  }
  for (const auto& h : t.opens())
    r.open_closures_semiopen = r.open_closures_semiopen && is_semiopen_char(t, t.closure(h));
  for (const auto& c : t.closed_family())
    r.closed_interiors_semiclosed =
        r.closed_interiors_semiclosed && is_semiclosed_char(t, t.interior(c));
  return r;
}

}  // namespace fss
