// SPDX-License-Identifier: Apache-2.0
//
// Randomized lattice / complement law checks shared by the unit and
// acceptance suites.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fss/explorer.hpp"

namespace fss::test {

struct LawTally {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> first_failures;

  void check(bool ok, const char* law) {
    if (ok) return;
    ++violations;
    if (first_failures.size() < 5) first_failures.emplace_back(law);
  }
};

inline SpaceSignature random_signature(Rng& rng, std::int64_t d) {
  const std::size_t nu = 1 + rng.below(4), np = 1 + rng.below(3);
  std::vector<std::string> u, e;
  for (std::size_t i = 0; i < nu; ++i) u.push_back("u" + std::to_string(i + 1));
  for (std::size_t i = 0; i < np; ++i) e.push_back("e" + std::to_string(i + 1));
  std::vector<Grade> amb;
  for (std::size_t c = 0; c < nu * np; ++c)
    amb.push_back(Grade::on_grid(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(d) + 1)), d));
  return SpaceSignature(std::move(u), std::move(e), std::move(amb));
}

/// Draws `samples` triples (g, k, m) inside random ambient sets over grids of
/// mixed denominators and checks the lattice, De Morgan and involution laws.
inline LawTally check_algebra_laws(std::uint64_t seed, std::uint64_t samples) {
  LawTally t;
  static constexpr std::int64_t kGrids[] = {1, 2, 3, 4, 5, 7, 10, 12};
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng(sample_seed(seed, i));
    const std::int64_t d = kGrids[rng.below(std::size(kGrids))];
    const auto sig = random_signature(rng, d);
    const GridSpec grid{d};
    const auto g = random_subset(rng, sig, grid);
    const auto k = random_subset(rng, sig, grid);
    const auto m = random_subset(rng, sig, grid);
    const auto phi = sig.phi(), amb = sig.ambient();
    ++t.samples;

    t.check(unite(g, k) == unite(k, g), "join commutes");
    t.check(intersect(g, k) == intersect(k, g), "meet commutes");
    t.check(unite(unite(g, k), m) == unite(g, unite(k, m)), "join associates");
    t.check(intersect(intersect(g, k), m) == intersect(g, intersect(k, m)), "meet associates");
    t.check(unite(g, g) == g && intersect(g, g) == g, "idempotence");
    t.check(unite(g, intersect(g, k)) == g, "absorption join");
    t.check(intersect(g, unite(g, k)) == g, "absorption meet");
    t.check(intersect(g, unite(k, m)) == unite(intersect(g, k), intersect(g, m)), "distributive");
    t.check(unite(g, intersect(k, m)) == intersect(unite(g, k), unite(g, m)), "distributive dual");
    t.check(unite(g, phi) == g && intersect(g, amb) == g, "bounds");
    t.check(subset_leq(g, k) == (intersect(g, k) == g), "order agrees with meet");
    t.check(subset_leq(intersect(g, k), g) && subset_leq(g, unite(g, k)), "meet/join bounds");
    t.check(complement(complement(g)) == g, "involution");
    t.check(complement(unite(g, k)) == intersect(complement(g), complement(k)), "De Morgan join");
    t.check(complement(intersect(g, k)) == unite(complement(g), complement(k)), "De Morgan meet");
    t.check(complement(phi) == amb && complement(amb) == phi, "complement of bounds");
    t.check(subset_leq(g, k) == subset_leq(complement(k), complement(g)), "complement antitone");
  }
  return t;
}

}  // namespace fss::test
