// SPDX-License-Identifier: Apache-2.0
#include "fss/explorer.hpp"

#include <algorithm>
#include <limits>

#include "fss/error.hpp"

namespace fss {

std::uint64_t Rng::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) noexcept {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return Rng(seed ^ (index * 0xD1B54A32D192ED03ULL)).next();
}

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require_grid(GridSpec grid) {
  if (grid.denominator < 1) throw Error(ErrorCode::Domain, "grid denominator must be >= 1");
}

// Uniform grid grade in [0, bound].
Grade random_grade_upto(Rng& rng, const Grade& bound, std::int64_t d) {
  const std::int64_t top = bound.grid_floor(d);
  return Grade::on_grid(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(top) + 1)),
                        d);
}

}  // namespace

GeneratedSpace gen_space(std::uint64_t seed, const GenSpaceOptions& options) {
  require_grid(options.grid);
  if (options.universe == 0 || options.parameters == 0)
    throw Error(ErrorCode::Domain, "universe and parameter counts must be >= 1");
  Rng rng(seed);
  const std::int64_t d = options.grid.denominator;
  std::vector<Grade> ambient;
  ambient.reserve(options.universe * options.parameters);
  for (std::size_t c = 0; c < options.universe * options.parameters; ++c)
    ambient.push_back(
        Grade::on_grid(1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(d))), d));
  SpaceSignature sig(numbered("u", options.universe), numbered("e", options.parameters),
                     std::move(ambient));
  std::vector<FuzzySoftSet> subbasis;
  for (std::size_t s = 0; s < options.subbasis; ++s)
    subbasis.push_back(random_subset(rng, sig, options.grid));
  auto topology = generate_from_subbasis(subbasis, sig);
  return {std::move(sig), std::move(topology), std::move(subbasis)};
}

FuzzySoftSet random_subset(Rng& rng, const SpaceSignature& sig, GridSpec grid) {
  require_grid(grid);
  std::vector<Grade> grades;
  grades.reserve(sig.cells());
  for (const auto& a : sig.ambient_grades())
    grades.push_back(random_grade_upto(rng, a, grid.denominator));
  return FuzzySoftSet(sig, std::move(grades));
}

FuzzySoftSet random_semiopen(Rng& rng, const FuzzySoftTopology& t, GridSpec grid) {
  const auto& opens = t.opens();
  const auto& h = opens[rng.below(opens.size())];
  auto r = random_subset(rng, t.signature(), grid);
  return unite(h, intersect(r, t.closure(h)));
}

FuzzySoftSet random_semiclosed(Rng& rng, const FuzzySoftTopology& t, GridSpec grid) {
  const auto& closed = t.closed_family();
  const auto& c = closed[rng.below(closed.size())];
  auto r = random_subset(rng, t.signature(), grid);
  return unite(t.interior(c), intersect(r, c));
}

std::uint64_t grid_subset_count(const SpaceSignature& sig, GridSpec grid) {
  require_grid(grid);
  unsigned __int128 count = 1;
  constexpr auto kSat = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t c = 0; c < sig.cells(); ++c) {
    const auto& a = sig.ambient_grades()[c];
    if (!a.on_grid_of(grid.denominator))
      throw Error(ErrorCode::Domain, "ambient grade " + a.to_string() + " at " +
                                         cell_label(sig, c) + " is not a multiple of 1/" +
                                         std::to_string(grid.denominator));
    count *= static_cast<unsigned __int128>(a.grid_floor(grid.denominator) + 1);
    if (count > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(count);
}

SubsetEnumerator::SubsetEnumerator(SpaceSignature sig, GridSpec grid, std::uint64_t cap)
    : sig_(std::move(sig)), grid_(grid), count_(grid_subset_count(sig_, grid)) {
  if (count_ > cap)
    throw Error(ErrorCode::EnumerationCap,
                "grid enumeration would visit " + std::to_string(count_) +
                    " subsets, above the cap of " + std::to_string(cap) +
                    "; use a coarser grid or a smaller space");
  for (const auto& a : sig_.ambient_grades()) limit_.push_back(a.grid_floor(grid.denominator));
  digit_.assign(limit_.size(), 0);
}

std::optional<FuzzySoftSet> SubsetEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Grade> grades;
  grades.reserve(digit_.size());
  for (auto k : digit_) grades.push_back(Grade::on_grid(k, grid_.denominator));
  // Odometer, last cell fastest, which is lexicographic order.
  std::size_t c = digit_.size();
  for (;;) {
    if (c == 0) {
      done_ = true;
      break;
    }
    --c;
    if (digit_[c] < limit_[c]) {
      ++digit_[c];
      break;
    }
    digit_[c] = 0;
  }
  return FuzzySoftSet(sig_, std::move(grades));
}

std::vector<FuzzySoftSet> enumerate_subsets(const SpaceSignature& sig, GridSpec grid,
                                            std::uint64_t cap) {
  SubsetEnumerator en(sig, grid, cap);
  std::vector<FuzzySoftSet> out;
  out.reserve(en.count());
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

GridCatalog catalog_grid(const FuzzySoftTopology& t, GridSpec grid, std::uint64_t cap) {
  SubsetEnumerator en(t.signature(), grid, cap);
  GridCatalog cat;
  cat.entries.reserve(en.count());
  while (auto s = en.next()) {
    const bool so = is_semiopen_char(t, *s);
    const bool sc = is_semiclosed_char(t, *s);
    cat.entries.push_back({std::move(*s), so, sc});
  }
  return cat;
}

FuzzySoftSet semiclosure_oracle(const GridCatalog& catalog, const FuzzySoftSet& g) {
  auto acc = g.signature().ambient();
  for (const auto& e : catalog.entries)
    if (e.semiclosed && subset_leq(g, e.set)) acc = intersect(acc, e.set);
  return acc;
}

FuzzySoftSet semiinterior_oracle(const GridCatalog& catalog, const FuzzySoftSet& g) {
  auto acc = g.signature().phi();
  for (const auto& e : catalog.entries)
    if (e.semiopen && subset_leq(e.set, g)) acc = unite(acc, e.set);
  return acc;
}

FuzzySoftSet semiclosure_oracle(const FuzzySoftTopology& t, const FuzzySoftSet& g, GridSpec grid,
                                std::uint64_t cap) {
  SubsetEnumerator en(t.signature(), grid, cap);
  auto acc = t.signature().ambient();
  while (auto s = en.next())
    if (subset_leq(g, *s) && is_semiclosed_char(t, *s)) acc = intersect(acc, *s);
  return acc;
}

FuzzySoftSet semiinterior_oracle(const FuzzySoftTopology& t, const FuzzySoftSet& g,
                                 GridSpec grid, std::uint64_t cap) {
  SubsetEnumerator en(t.signature(), grid, cap);
  auto acc = t.signature().phi();
  while (auto s = en.next())
    if (subset_leq(*s, g) && is_semiopen_char(t, *s)) acc = unite(acc, *s);
  return acc;
}

std::string_view search_property_id(SearchProperty p) noexcept {
  switch (p) {
    case SearchProperty::SemiopenMeet: return "semiopen-meet";
    case SearchProperty::SemiopenMeetOpen: return "semiopen-meet-open";
    case SearchProperty::SemiclosedJoin: return "semiclosed-join";
    case SearchProperty::SemiopenNotOpen: return "semiopen-not-open";
  }
  return "unknown";
}

SearchProperty parse_search_property(std::string_view id) {
  for (auto p : {SearchProperty::SemiopenMeet, SearchProperty::SemiopenMeetOpen,
                 SearchProperty::SemiclosedJoin, SearchProperty::SemiopenNotOpen})
    if (search_property_id(p) == id) return p;
  throw Error(ErrorCode::UnknownProperty,
              "unknown property \"" + std::string(id) +
                  "\" (expected semiopen-meet, semiopen-meet-open, semiclosed-join or "
                  "semiopen-not-open)");
}

std::string_view search_status_id(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetSpent: return "budget-spent";
  }
  return "unknown";
}

namespace {

// Inputs a counterexample is built from; the derived set is recomputed.
std::size_t input_count(SearchProperty p) {
  return p == SearchProperty::SemiopenNotOpen ? 1 : 2;
}

// Inputs that minimization may lower. The open operand of semiopen-meet-open
// must stay a member of the topology.
std::size_t shrinkable_count(SearchProperty p) {
  return p == SearchProperty::SemiopenMeetOpen ? 1 : input_count(p);
}

std::optional<NamedSet> derived(SearchProperty p, const std::vector<FuzzySoftSet>& in) {
  switch (p) {
    case SearchProperty::SemiopenMeet: return NamedSet{"g&k", intersect(in[0], in[1])};
    case SearchProperty::SemiopenMeetOpen: return NamedSet{"g&h", intersect(in[0], in[1])};
    case SearchProperty::SemiclosedJoin: return NamedSet{"g|k", unite(in[0], in[1])};
    case SearchProperty::SemiopenNotOpen: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> input_names(SearchProperty p) {
  switch (p) {
    case SearchProperty::SemiopenMeetOpen: return {"g", "h"};
    case SearchProperty::SemiopenNotOpen: return {"g"};
    default: return {"g", "k"};
  }
}

// Characterization-route test of "the property fails on these inputs".
bool breaks(const FuzzySoftTopology& t, SearchProperty p, const std::vector<FuzzySoftSet>& in) {
  switch (p) {
    case SearchProperty::SemiopenMeet:
      return is_semiopen_char(t, in[0]) && is_semiopen_char(t, in[1]) &&
             !is_semiopen_char(t, intersect(in[0], in[1]));
    case SearchProperty::SemiopenMeetOpen:
      return is_semiopen_char(t, in[0]) && t.is_open(in[1]) &&
             !is_semiopen_char(t, intersect(in[0], in[1]));
    case SearchProperty::SemiclosedJoin:
      return is_semiclosed_char(t, in[0]) && is_semiclosed_char(t, in[1]) &&
             !is_semiclosed_char(t, unite(in[0], in[1]));
    case SearchProperty::SemiopenNotOpen:
      return is_semiopen_char(t, in[0]) && !t.is_open(in[0]);
  }
  return false;
}

Counterexample assemble(const FuzzySoftTopology& t, SearchProperty p,
                        const std::vector<FuzzySoftSet>& in, GridSpec grid) {
  Counterexample c{p, {}, {}, std::nullopt, false};
  const auto names = input_names(p);
  for (std::size_t i = 0; i < in.size(); ++i) c.sets.push_back({names[i], in[i]});
  if (auto d = derived(p, in)) c.sets.push_back(std::move(*d));
  for (const auto& s : c.sets) c.transcripts.push_back(classify(t, s.set));

  constexpr std::uint64_t kOracleCap = 20'000;
  bool on_grid = true;
  for (const auto& s : c.sets)
    for (const auto& g : s.set.grades()) on_grid = on_grid && g.on_grid_of(grid.denominator);
  std::uint64_t count = kOracleCap + 1;
  try {
    count = grid_subset_count(t.signature(), grid);
  } catch (const Error&) {
  }
  if (on_grid && count <= kOracleCap) {
    const auto cat = catalog_grid(t, grid, kOracleCap);
    const auto& last = c.sets.back().set;
    switch (p) {
      case SearchProperty::SemiopenMeet:
      case SearchProperty::SemiopenMeetOpen:
        c.oracle_confirms = semiinterior_oracle(cat, last) != last &&
                            semiinterior_oracle(cat, in[0]) == in[0];
        break;
      case SearchProperty::SemiclosedJoin:
        c.oracle_confirms = semiclosure_oracle(cat, last) != last &&
                            semiclosure_oracle(cat, in[0]) == in[0] &&
                            semiclosure_oracle(cat, in[1]) == in[1];
        break;
      case SearchProperty::SemiopenNotOpen:
        c.oracle_confirms = semiinterior_oracle(cat, in[0]) == in[0] && !t.is_open(in[0]);
        break;
    }
  }
  return c;
}

std::vector<FuzzySoftSet> inputs_of(const Counterexample& c) {
  std::vector<FuzzySoftSet> in;
  for (std::size_t i = 0; i < input_count(c.property); ++i) in.push_back(c.sets[i].set);
  return in;
}

}  // namespace

bool Counterexample::verified() const {
  if (transcripts.size() != sets.size()) return false;
  for (const auto& r : transcripts)
    if (!r.routes_agree()) return false;
  const auto& t = transcripts;
  switch (property) {
    case SearchProperty::SemiopenMeet:
      return t[0].semiopen_def && t[1].semiopen_def && !t[2].semiopen_def;
    case SearchProperty::SemiopenMeetOpen:
      return t[0].semiopen_def && t[1].open && !t[2].semiopen_def;
    case SearchProperty::SemiclosedJoin:
      return t[0].semiclosed_def && t[1].semiclosed_def && !t[2].semiclosed_def;
    case SearchProperty::SemiopenNotOpen:
      return t[0].semiopen_def && !t[0].open;
  }
  return false;
}

Counterexample minimize(const FuzzySoftTopology& t, Counterexample c, GridSpec grid) {
  auto in = inputs_of(c);
  const std::int64_t d = grid.denominator;
  const Grade step = Grade::on_grid(1, d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < shrinkable_count(c.property); ++s) {
      for (std::size_t cell = 0; cell < in[s].grades().size(); ++cell) {
        while (!in[s].at(cell).is_zero()) {
          const auto& cur = in[s].at(cell);
          if (cur < step) break;
          std::vector<Grade> grades(in[s].grades().begin(), in[s].grades().end());
          grades[cell] = cur.minus(step);
          auto trial = in;
          trial[s] = FuzzySoftSet(in[s].signature(), std::move(grades));
          if (!breaks(t, c.property, trial)) break;
          in = std::move(trial);
          changed = true;
        }
      }
    }
  }
  auto out = assemble(t, c.property, in, grid);
  out.minimized = true;
  return out;
}

SpaceSearch search_in_space(const FuzzySoftTopology& t, SearchProperty property, GridSpec grid,
                            std::uint64_t seed, std::uint64_t exhaustive_limit,
                            std::size_t random_pairs) {
  require_grid(grid);
  SpaceSearch result;
  const auto finish = [&](std::vector<FuzzySoftSet> in) {
    result.witness = minimize(t, assemble(t, property, in, grid), grid);
    return result;
  };

  std::uint64_t count = std::numeric_limits<std::uint64_t>::max();
  try {
    count = grid_subset_count(t.signature(), grid);
  } catch (const Error&) {
  }
  if (count <= exhaustive_limit) {
    result.exhaustive = true;
    const auto cat = catalog_grid(t, grid, exhaustive_limit);
    std::vector<const FuzzySoftSet*> pool;
    for (const auto& e : cat.entries) {
      const bool want =
          property == SearchProperty::SemiclosedJoin ? e.semiclosed : e.semiopen;
      if (want) pool.push_back(&e.set);
    }
    switch (property) {
      case SearchProperty::SemiopenNotOpen:
        for (const auto* g : pool)
          if (!t.is_open(*g)) return finish({*g});
        break;
      case SearchProperty::SemiopenMeetOpen:
        for (const auto* g : pool)
          for (const auto& h : t.opens())
            if (breaks(t, property, {*g, h})) return finish({*g, h});
        break;
      case SearchProperty::SemiopenMeet:
      case SearchProperty::SemiclosedJoin:
        for (std::size_t i = 0; i < pool.size(); ++i)
          for (std::size_t j = i + 1; j < pool.size(); ++j)
            if (breaks(t, property, {*pool[i], *pool[j]})) return finish({*pool[i], *pool[j]});
        break;
    }
    return result;
  }

  Rng rng(seed);
  for (std::size_t n = 0; n < random_pairs; ++n) {
    std::vector<FuzzySoftSet> in;
    switch (property) {
      case SearchProperty::SemiopenNotOpen:
        in = {random_semiopen(rng, t, grid)};
        break;
      case SearchProperty::SemiopenMeetOpen:
        in = {random_semiopen(rng, t, grid), t.opens()[rng.below(t.opens().size())]};
        break;
      case SearchProperty::SemiopenMeet:
        in = {random_semiopen(rng, t, grid), random_semiopen(rng, t, grid)};
        break;
      case SearchProperty::SemiclosedJoin:
        in = {random_semiclosed(rng, t, grid), random_semiclosed(rng, t, grid)};
        break;
    }
    if (breaks(t, property, in)) return finish(std::move(in));
  }
  return result;
}

SearchOutcome search_counterexample(const SearchOptions& options) {
  if (options.budget < 1) throw Error(ErrorCode::Domain, "search budget must be >= 1");
  SearchOutcome out;
  out.options = options;
  bool all_exhaustive = true;
  for (std::uint64_t i = 0; i < options.budget; ++i) {
    const std::uint64_t space_seed = sample_seed(options.seed, i);
    Rng pick(space_seed);
    GenSpaceOptions gen{options.universe, options.parameters, options.grid,
                        1 + static_cast<std::size_t>(pick.below(std::max<std::size_t>(
                                1, options.max_subbasis)))};
    auto space = gen_space(pick.next(), gen);
    ++out.spaces_sampled;
    auto found = search_in_space(space.topology, options.property, options.grid, pick.next());
    all_exhaustive = all_exhaustive && found.exhaustive;
    if (found.witness) {
      out.status = SearchStatus::Found;
      out.found = SearchOutcome::Found{i, space_seed, std::move(space.topology),
                                       std::move(*found.witness)};
      return out;
    }
  }
  out.status = all_exhaustive ? SearchStatus::Exhausted : SearchStatus::BudgetSpent;
  return out;
}

const std::vector<std::string>& fuzz_property_ids() {
  static const std::vector<std::string> ids = {
      "route-agreement-semiopen",
      "route-agreement-semiclosed",
      "equivalence-four-way",
      "opens-semiopen-closed-semiclosed",
      "union-stability-semiopen",
      "intersection-stability-semiclosed",
      "sandwich-semiopen",
      "sandwich-semiclosed",
      "point-characterization",
      "operator-image",
      "property-i",
      "property-ii",
      "property-iii",
      "property-iv",
      "property-v",
      "property-vi",
      "property-vii",
      "property-viii",
      "property-ix",
      "property-x",
      "property-xi",
      "property-xii",
      "property-xiii",
      "property-xiv",
  };
  return ids;
}

std::uint64_t FuzzReport::total_failed() const noexcept {
  std::uint64_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

const FuzzTally* FuzzReport::tally(std::string_view property) const noexcept {
  for (const auto& t : tallies)
    if (t.property == property) return &t;
  return nullptr;
}

namespace {

class FuzzRecorder {
 public:
  explicit FuzzRecorder(FuzzReport& report) : report_(report) {
    for (const auto& id : fuzz_property_ids()) report_.tallies.push_back({id});
  }

  void begin_sample(std::uint64_t index, std::uint64_t seed, const FuzzySoftTopology* t) {
    index_ = index;
    seed_ = seed;
    topology_ = t;
  }

  void check(std::string_view property, bool ok, std::vector<NamedSet> sets,
             std::string detail = {}) {
    auto& tally = find(property);
    ++tally.checked;
    if (ok) return;
    ++tally.failed;
    if (tally.failed > report_.options.failures_kept) return;
    report_.failures.push_back({std::string(property), index_, seed_, *topology_,
                                std::move(sets), std::move(detail)});
  }

 private:
  FuzzTally& find(std::string_view property) {
    for (auto& t : report_.tallies)
      if (t.property == property) return t;
    throw Error(ErrorCode::UnknownProperty, "unregistered fuzz property " + std::string(property));
  }

  FuzzReport& report_;
  std::uint64_t index_ = 0;
  std::uint64_t seed_ = 0;
  const FuzzySoftTopology* topology_ = nullptr;
};

void fuzz_sample(FuzzRecorder& rec, const FuzzySoftTopology& t, GridSpec grid, Rng& rng) {
  const auto& sig = t.signature();
  const auto g = random_subset(rng, sig, grid);
  const auto k = random_subset(rng, sig, grid);
  const auto so1 = random_semiopen(rng, t, grid);
  const auto so2 = random_semiopen(rng, t, grid);
  const auto sc1 = random_semiclosed(rng, t, grid);
  const auto sc2 = random_semiclosed(rng, t, grid);
  const auto r = random_subset(rng, sig, grid);

  for (const auto* s : {&g, &k, &so1, &sc1}) {
    const auto c = classify(t, *s);
    rec.check("route-agreement-semiopen", c.semiopen_def == c.semiopen_char, {{"g", *s}});
    rec.check("route-agreement-semiclosed", c.semiclosed_def == c.semiclosed_char, {{"g", *s}});
    const auto eq = equivalence_report(t, *s);
    rec.check("equivalence-four-way", eq.all_agree(), {{"g", *s}});
    const auto img = operator_image_check(t, *s);
    rec.check("operator-image", img.holds(), {{"g", *s}});
  }

  {
    bool ok = true;
    for (const auto& h : t.opens()) {
      ok = ok && is_semiopen_def(t, h).holds;
      if (t.is_closed(h)) ok = ok && is_semiclosed_def(t, h).holds;
    }
    for (const auto& c : t.closed_family()) ok = ok && is_semiclosed_def(t, c).holds;
    ok = ok && is_semiopen_def(t, sig.phi()).holds && is_semiclosed_def(t, sig.phi()).holds &&
         is_semiopen_def(t, sig.ambient()).holds && is_semiclosed_def(t, sig.ambient()).holds;
    rec.check("opens-semiopen-closed-semiclosed", ok, {});
  }

  rec.check("union-stability-semiopen", is_semiopen_def(t, unite(so1, so2)).holds,
            {{"g", so1}, {"k", so2}});
  rec.check("intersection-stability-semiclosed",
            is_semiclosed_def(t, intersect(sc1, sc2)).holds, {{"g", sc1}, {"k", sc2}});

  {
    const auto upper = unite(so1, intersect(r, t.closure(so1)));
    rec.check("sandwich-semiopen", sandwich_check_semiopen(t, so1, upper),
              {{"g", so1}, {"k", upper}});
    const auto lower = unite(t.interior(sc1), intersect(r, sc1));
    rec.check("sandwich-semiclosed", sandwich_check_semiclosed(t, sc1, lower),
              {{"m", sc1}, {"k", lower}});
  }

  for (const auto* s : {&g, &so1})
    rec.check("point-characterization", point_characterization_check(t, *s).holds(),
              {{"g", *s}});

  const std::pair<const FuzzySoftSet*, FuzzySoftSet> pairs[] = {
      {&g, k}, {&so1, so2}, {&sc1, sc2}, {&g, unite(g, k)}};
  for (const auto& [a, b] : pairs) {
    for (const auto& v : property_suite(t, *a, b)) {
      if (!v.applicable) continue;
      std::vector<NamedSet> sets{{"g", *a}, {"k", b}};
      if (v.lhs) sets.push_back({"lhs", *v.lhs});
      if (v.rhs) sets.push_back({"rhs", *v.rhs});
      rec.check("property-" + v.id, v.holds, std::move(sets), v.statement);
    }
  }
}

}  // namespace

FuzzReport fuzz_theorems(const FuzzOptions& options) {
  if (options.max_universe < 1 || options.max_parameters < 1 || options.max_grid < 1)
    throw Error(ErrorCode::Domain, "fuzz size bounds must be >= 1");
  FuzzReport report;
  report.options = options;
  FuzzRecorder rec(report);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::uint64_t s = sample_seed(options.seed, i);
    Rng rng(s);
    GenSpaceOptions gen;
    gen.universe = 1 + rng.below(options.max_universe);
    gen.parameters = 1 + rng.below(options.max_parameters);
    gen.grid = {1 + static_cast<std::int64_t>(
                        rng.below(static_cast<std::uint64_t>(options.max_grid)))};
    gen.subbasis = rng.below(options.max_subbasis + 1);
    const auto space = gen_space(rng.next(), gen);
    rec.begin_sample(i, s, &space.topology);
    fuzz_sample(rec, space.topology, gen.grid, rng);
  }
  return report;
}

}  // namespace fss
