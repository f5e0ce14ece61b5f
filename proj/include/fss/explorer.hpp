// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fss/semi.hpp"

namespace fss {

/// SplitMix64 (Steele, Lea & Flood). Chosen because it is fully specified by
/// a dozen lines, so seeded outputs can be reproduced in any language.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// below(n) rejects raw outputs under (2^64 mod n) and returns raw % n, which
/// is exactly uniform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

 private:
  std::uint64_t state_;
};

/// Seed of the index-th independent sample drawn under a master seed:
/// the first output of Rng(seed ^ (index * 0xD1B54A32D192ED03)).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct GridSpec {
  std::int64_t denominator = 1;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct GenSpaceOptions {
  std::size_t universe = 3;
  std::size_t parameters = 2;
  GridSpec grid{4};
  std::size_t subbasis = 3;
};

struct GeneratedSpace {
  SpaceSignature signature;
  FuzzySoftTopology topology;
  std::vector<FuzzySoftSet> subbasis;
};

/// Ambient grades are drawn uniformly from {1/d, ..., 1}; each subbasis cell
/// from {0, 1/d, ..., ambient}. Objects are named u1.., parameters e1...
GeneratedSpace gen_space(std::uint64_t seed, const GenSpaceOptions& options);

/// Uniform grid-valued subset of the ambient set.
FuzzySoftSet random_subset(Rng& rng, const SpaceSignature& sig, GridSpec grid);
/// Semiopen by construction: h ⊔ (r ⊓ cl(h)) for a random open h.
FuzzySoftSet random_semiopen(Rng& rng, const FuzzySoftTopology& t, GridSpec grid);
/// Semiclosed by construction: int(c) ⊔ (r ⊓ c) for a random closed c.
FuzzySoftSet random_semiclosed(Rng& rng, const FuzzySoftTopology& t, GridSpec grid);

/// Number of grid-valued subsets of the ambient set, saturated at UINT64_MAX.
/// Throws ErrorCode::Domain if an ambient grade is off the grid.
std::uint64_t grid_subset_count(const SpaceSignature& sig, GridSpec grid);

/// Streams every grid-valued subset of the ambient set once, in
/// lexicographic cell order (Φ_E first, f_E last).
class SubsetEnumerator {
 public:
  /// Throws ErrorCode::EnumerationCap naming the count when it exceeds cap.
  SubsetEnumerator(SpaceSignature sig, GridSpec grid,
                   std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<FuzzySoftSet> next();

 private:
  SpaceSignature sig_;
  GridSpec grid_;
  std::uint64_t count_;
  std::vector<std::int64_t> limit_;
  std::vector<std::int64_t> digit_;
  bool done_ = false;
};

std::vector<FuzzySoftSet> enumerate_subsets(const SpaceSignature& sig, GridSpec grid,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// Every grid subset tagged with its semiopen/semiclosed status, for repeated
/// oracle queries against one topology.
struct GridCatalog {
  struct Entry {
    FuzzySoftSet set;
    bool semiopen;
    bool semiclosed;
  };
  std::vector<Entry> entries;
};

GridCatalog catalog_grid(const FuzzySoftTopology& t, GridSpec grid,
                         std::uint64_t cap = kDefaultEnumerationCap);

/// Meet of every enumerated semiclosed superset of g.
FuzzySoftSet semiclosure_oracle(const FuzzySoftTopology& t, const FuzzySoftSet& g, GridSpec grid,
                                std::uint64_t cap = kDefaultEnumerationCap);
/// Join of every enumerated semiopen subset of g.
FuzzySoftSet semiinterior_oracle(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                                 GridSpec grid, std::uint64_t cap = kDefaultEnumerationCap);
FuzzySoftSet semiclosure_oracle(const GridCatalog& catalog, const FuzzySoftSet& g);
FuzzySoftSet semiinterior_oracle(const GridCatalog& catalog, const FuzzySoftSet& g);

enum class SearchProperty {
  SemiopenMeet,      // two semiopen sets whose meet is not semiopen
  SemiopenMeetOpen,  // semiopen ⊓ open that is not semiopen
  SemiclosedJoin,    // two semiclosed sets whose join is not semiclosed
  SemiopenNotOpen,   // semiopen but not open
};

std::string_view search_property_id(SearchProperty p) noexcept;
/// Throws ErrorCode::UnknownProperty.
SearchProperty parse_search_property(std::string_view id);

struct NamedSet {
  std::string name;
  FuzzySoftSet set;
};

struct Counterexample {
  SearchProperty property;
  /// Named inputs followed by the derived set that breaks the property.
  std::vector<NamedSet> sets;
  /// Independent re-check of every named set under both routes.
  std::vector<ClassificationReport> transcripts;
  /// Whether the enumeration oracle confirms the failure; empty when the
  /// space is too large to enumerate.
  std::optional<bool> oracle_confirms;
  bool minimized = false;

  /// The property is broken by the definition route and the
  /// characterization route alike, and the routes agree on every set.
  bool verified() const;
};

/// Deterministic search inside one space. Enumerates every grid subset when
/// there are at most exhaustive_limit of them; otherwise samples
/// random_pairs constructed candidates. The result is minimized.
struct SpaceSearch {
  std::optional<Counterexample> witness;
  bool exhaustive = false;
};

SpaceSearch search_in_space(const FuzzySoftTopology& t, SearchProperty property, GridSpec grid,
                            std::uint64_t seed = 0, std::uint64_t exhaustive_limit = 1024,
                            std::size_t random_pairs = 4096);

/// Lowers grades one grid step at a time while the property keeps failing.
Counterexample minimize(const FuzzySoftTopology& t, Counterexample c, GridSpec grid);

struct SearchOptions {
  SearchProperty property = SearchProperty::SemiopenMeet;
  std::uint64_t budget = 100;
  std::uint64_t seed = 1;
  std::size_t universe = 3;
  std::size_t parameters = 1;
  GridSpec grid{1};
  std::size_t max_subbasis = 2;
};

enum class SearchStatus { Found, Exhausted, BudgetSpent };
std::string_view search_status_id(SearchStatus s) noexcept;

struct SearchOutcome {
  SearchOptions options;
  SearchStatus status = SearchStatus::BudgetSpent;
  std::uint64_t spaces_sampled = 0;
  struct Found {
    std::uint64_t space_index;
    std::uint64_t space_seed;
    FuzzySoftTopology topology;
    Counterexample counterexample;
  };
  std::optional<Found> found;
};

/// Samples up to budget spaces (space i uses sample_seed(seed, i)) and stops
/// at the first counterexample. Exhausted means every sampled space had all
/// of its grid subsets checked without success.
SearchOutcome search_counterexample(const SearchOptions& options);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  std::size_t max_universe = 3;
  std::size_t max_parameters = 2;
  std::int64_t max_grid = 4;
  std::size_t max_subbasis = 3;
  /// Reproduction bundles kept per property.
  std::size_t failures_kept = 3;
};

struct FuzzFailure {
  std::string property;
  std::uint64_t sample_index;
  std::uint64_t sample_seed;
  FuzzySoftTopology topology;
  std::vector<NamedSet> sets;
  std::string detail;
};

struct FuzzTally {
  std::string property;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct FuzzReport {
  FuzzOptions options;
  std::vector<FuzzTally> tallies;  // fixed order, see fuzz_property_ids()
  std::vector<FuzzFailure> failures;

  std::uint64_t total_failed() const noexcept;
  bool passed() const noexcept { return total_failed() == 0; }
  const FuzzTally* tally(std::string_view property) const noexcept;
};

const std::vector<std::string>& fuzz_property_ids();

/// Checks every theorem-level invariant on samples drawn under seed. Sample i
/// depends only on (seed, i), so the report does not depend on evaluation
/// order.
FuzzReport fuzz_theorems(const FuzzOptions& options);

}  // namespace fss
