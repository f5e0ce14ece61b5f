// SPDX-License-Identifier: Apache-2.0
#include "fss/algebra.hpp"

#include <algorithm>
#include <set>

#include "fss/error.hpp"

namespace fss {
namespace {

void require_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) throw Error(ErrorCode::Malformed, std::string(what) + " is empty");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::Malformed, std::string(what) + " has an empty name");
    if (!seen.insert(n).second)
      throw Error(ErrorCode::DuplicateName, std::string(what) + " repeats \"" + n + "\"");
  }
}

template <typename Op>
FuzzySoftSet cellwise(const FuzzySoftSet& g, const FuzzySoftSet& k, Op op) {
  require_same_signature(g.signature(), k.signature());
  std::vector<Grade> out;
  out.reserve(g.grades().size());
  for (std::size_t c = 0; c < g.grades().size(); ++c) out.push_back(op(g.at(c), k.at(c)));
  return FuzzySoftSet(g.signature(), std::move(out));
}

}  // namespace

SpaceSignature::SpaceSignature(std::vector<std::string> universe,
                               std::vector<std::string> parameters, std::vector<Grade> ambient) {
  require_names(universe, "universe");
  require_names(parameters, "parameter set");
  if (ambient.size() != universe.size() * parameters.size())
    throw Error(ErrorCode::Malformed, "ambient set needs " +
                                          std::to_string(universe.size() * parameters.size()) +
                                          " grades, got " + std::to_string(ambient.size()));
  data_ = std::make_shared<const Data>(
      Data{std::move(universe), std::move(parameters), std::move(ambient)});
}

SpaceSignature SpaceSignature::crisp(std::vector<std::string> universe,
                                     std::vector<std::string> parameters) {
  std::vector<Grade> ones(universe.size() * parameters.size(), Grade::one());
  return SpaceSignature(std::move(universe), std::move(parameters), std::move(ones));
}

FuzzySoftSet SpaceSignature::ambient() const { return FuzzySoftSet(*this, data_->ambient); }

FuzzySoftSet SpaceSignature::phi() const {
  return FuzzySoftSet(*this, std::vector<Grade>(cells()));
}

bool operator==(const SpaceSignature& a, const SpaceSignature& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->universe == b.data_->universe && a.data_->parameters == b.data_->parameters &&
         a.data_->ambient == b.data_->ambient;
}

void require_same_signature(const SpaceSignature& a, const SpaceSignature& b) {
  if (a == b) return;
  if (a.universe() != b.universe())
    throw Error(ErrorCode::SignatureMismatch, "signature mismatch: universe differs");
  if (a.parameters() != b.parameters())
    throw Error(ErrorCode::SignatureMismatch, "signature mismatch: parameter set differs");
  throw Error(ErrorCode::SignatureMismatch, "signature mismatch: ambient set differs");
}

FuzzySoftSet::FuzzySoftSet(SpaceSignature signature, std::vector<Grade> grades)
    : signature_(std::move(signature)), grades_(std::move(grades)) {
  if (grades_.size() != signature_.cells())
    throw Error(ErrorCode::Malformed, "fuzzy soft set needs " +
                                          std::to_string(signature_.cells()) + " grades, got " +
                                          std::to_string(grades_.size()));
}

bool FuzzySoftSet::is_phi() const noexcept {
  return std::all_of(grades_.begin(), grades_.end(), [](const Grade& g) { return g.is_zero(); });
}

bool FuzzySoftSet::within_ambient() const noexcept {
  const auto& amb = signature_.ambient_grades();
  for (std::size_t c = 0; c < grades_.size(); ++c)
    if (amb[c] < grades_[c]) return false;
  return true;
}

std::vector<std::size_t> FuzzySoftSet::support() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < signature_.parameter_count(); ++e)
    for (std::size_t x = 0; x < signature_.objects(); ++x)
      if (!at(e, x).is_zero()) {
        out.push_back(e);
        break;
      }
  return out;
}

bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b) noexcept {
  return a.grades_ == b.grades_ && a.signature_ == b.signature_;
}

bool canonical_less(const FuzzySoftSet& a, const FuzzySoftSet& b) noexcept {
  return std::lexicographical_compare(a.grades().begin(), a.grades().end(), b.grades().begin(),
                                      b.grades().end());
}

FuzzySoftPoint::FuzzySoftPoint(SpaceSignature signature, std::size_t parameter,
                               std::vector<Grade> membership)
    : signature_(std::move(signature)), parameter_(parameter), membership_(std::move(membership)) {
  if (parameter_ >= signature_.parameter_count())
    throw Error(ErrorCode::Domain, "point parameter index out of range");
  if (membership_.size() != signature_.objects())
    throw Error(ErrorCode::Malformed, "point membership needs one grade per object");
  if (std::all_of(membership_.begin(), membership_.end(),
                  [](const Grade& g) { return g.is_zero(); }))
    throw Error(ErrorCode::Domain, "fuzzy soft point with identically zero membership");
}

FuzzySoftSet FuzzySoftPoint::as_set() const {
  std::vector<Grade> grades(signature_.cells());
  for (std::size_t x = 0; x < membership_.size(); ++x)
    grades[signature_.cell(parameter_, x)] = membership_[x];
  return FuzzySoftSet(signature_, std::move(grades));
}

bool subset_leq(const FuzzySoftSet& g, const FuzzySoftSet& k) {
  require_same_signature(g.signature(), k.signature());
  for (std::size_t c = 0; c < g.grades().size(); ++c)
    if (k.at(c) < g.at(c)) return false;
  return true;
}

FuzzySoftSet unite(const FuzzySoftSet& g, const FuzzySoftSet& k) {
  return cellwise(g, k, [](const Grade& a, const Grade& b) { return max(a, b); });
}

FuzzySoftSet intersect(const FuzzySoftSet& g, const FuzzySoftSet& k) {
  return cellwise(g, k, [](const Grade& a, const Grade& b) { return min(a, b); });
}

FuzzySoftSet unite_all(std::span<const FuzzySoftSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::Contract, "union of an empty family");
  FuzzySoftSet acc = sets.front();
  for (const auto& s : sets.subspan(1)) acc = unite(acc, s);
  return acc;
}

FuzzySoftSet intersect_all(std::span<const FuzzySoftSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::Contract, "intersection of an empty family");
  FuzzySoftSet acc = sets.front();
  for (const auto& s : sets.subspan(1)) acc = intersect(acc, s);
  return acc;
}

FuzzySoftSet complement(const FuzzySoftSet& g) {
  const auto& sig = g.signature();
  const auto& amb = sig.ambient_grades();
  std::vector<Grade> out;
  out.reserve(amb.size());
  for (std::size_t c = 0; c < amb.size(); ++c) {
    if (amb[c] < g.at(c))
      throw Error(ErrorCode::Domain, "set exceeds ambient at " + cell_label(sig, c) + ": " +
                                         g.at(c).to_string() + " > " + amb[c].to_string());
    out.push_back(amb[c].minus(g.at(c)));
  }
  return FuzzySoftSet(sig, std::move(out));
}

bool point_in(const FuzzySoftPoint& p, const FuzzySoftSet& h) {
  require_same_signature(p.signature(), h.signature());
  const auto m = p.membership();
  for (std::size_t x = 0; x < m.size(); ++x)
    if (h.at(p.parameter(), x) < m[x]) return false;
  return true;
}

std::vector<FuzzySoftPoint> decompose_points(const FuzzySoftSet& g) {
  const auto& sig = g.signature();
  std::vector<FuzzySoftPoint> out;
  for (std::size_t e : g.support()) {
    std::vector<Grade> slice;
    slice.reserve(sig.objects());
    for (std::size_t x = 0; x < sig.objects(); ++x) slice.push_back(g.at(e, x));
    out.emplace_back(sig, e, std::move(slice));
  }
  return out;
}

std::string cell_label(const SpaceSignature& sig, std::size_t cell) {
  const std::size_t e = cell / sig.objects();
  const std::size_t x = cell % sig.objects();
  return "(" + sig.parameters()[e] + "," + sig.universe()[x] + ")";
}

}  // namespace fss
