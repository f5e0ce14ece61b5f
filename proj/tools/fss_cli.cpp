// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "fss/fss.h"

namespace {

struct Owned {
  char* text = nullptr;
  ~Owned() { fss_string_free(text); }
};

struct SpaceDeleter {
  void operator()(fss_space* s) const { fss_space_free(s); }
};
using SpacePtr = std::unique_ptr<fss_space, SpaceDeleter>;

int finish(fss_status status, const Owned& out) {
  if (out.text) {
    if (status == FSS_OK || status == FSS_FAILED)
      std::fputs(out.text, stdout);
    else
      std::fprintf(stderr, "error (%s): %s\n", fss_status_name(status), out.text);
  }
  return fss_exit_code(status);
}

int with_space(const std::string& path, auto&& body) {
  fss_space* raw = nullptr;
  Owned err;
  const auto st = fss_space_load(path.c_str(), &raw, &err.text);
  if (st != FSS_OK) return finish(st, err);
  SpacePtr space(raw);
  return body(space.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy soft topology toolkit: axioms, semiopen/semiclosed sets, oracles, search"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Stable machine-readable output");

  std::string file, set_name, g_name, k_name;

  auto* validate = app.add_subcommand("validate", "Check the topology axioms of FILE");
  validate->add_option("FILE", file)->required();

  auto* classify = app.add_subcommand("classify", "Classify SET as semiopen/semiclosed");
  classify->add_option("FILE", file)->required();
  classify->add_option("SET", set_name)->required();

  struct OpCmd {
    const char* name;
    const char* help;
    fss_operator op;
    CLI::App* cmd;
  };
  OpCmd ops[] = {
      {"int", "Interior of SET", FSS_OP_INTERIOR, nullptr},
      {"cl", "Closure of SET", FSS_OP_CLOSURE, nullptr},
      {"sint", "Semi-interior of SET", FSS_OP_SEMI_INTERIOR, nullptr},
      {"scl", "Semi-closure of SET", FSS_OP_SEMI_CLOSURE, nullptr},
  };
  for (auto& o : ops) {
    o.cmd = app.add_subcommand(o.name, o.help);
    o.cmd->add_option("FILE", file)->required();
    o.cmd->add_option("SET", set_name)->required();
  }

  auto* properties = app.add_subcommand("properties", "Semi-interior/closure identities on G, K");
  properties->add_option("FILE", file)->required();
  properties->add_option("G", g_name)->required();
  properties->add_option("K", k_name)->required();

  auto* points = app.add_subcommand("points", "Point decomposition and characterization");
  points->add_option("FILE", file)->required();
  points->add_option("SET", set_name)->required();

  fss_search_options search_opts;
  fss_search_options_init(&search_opts);
  std::string property;
  auto* search = app.add_subcommand("search", "Counterexample search");
  search->add_option("PROPERTY", property,
                     "semiopen-meet | semiopen-meet-open | semiclosed-join | semiopen-not-open")
      ->required();
  search->add_option("--budget", search_opts.budget, "Spaces to sample")->capture_default_str();
  search->add_option("--seed", search_opts.seed)->capture_default_str();
  search->add_option("--grid", search_opts.grid, "Grid denominator d")->capture_default_str();
  search->add_option("--universe", search_opts.universe)->capture_default_str();
  search->add_option("--params", search_opts.parameters)->capture_default_str();
  search->add_option("--subbasis", search_opts.max_subbasis, "Largest subbasis size")
      ->capture_default_str();

  fss_fuzz_options fuzz_opts;
  fss_fuzz_options_init(&fuzz_opts);
  auto* fuzz = app.add_subcommand("fuzz", "Fuzz every theorem-level invariant");
  fuzz->add_option("--seed", fuzz_opts.seed)->capture_default_str();
  fuzz->add_option("--samples", fuzz_opts.samples)->capture_default_str();
  fuzz->add_option("--max-universe", fuzz_opts.max_universe)->capture_default_str();
  fuzz->add_option("--max-params", fuzz_opts.max_parameters)->capture_default_str();
  fuzz->add_option("--max-grid", fuzz_opts.max_grid)->capture_default_str();
  fuzz->add_option("--max-subbasis", fuzz_opts.max_subbasis)->capture_default_str();

  fss_gen_options gen_opts;
  fss_gen_options_init(&gen_opts);
  auto* gen = app.add_subcommand("gen", "Emit a random space document");
  gen->add_option("--seed", gen_opts.seed)->capture_default_str();
  gen->add_option("--universe", gen_opts.universe)->capture_default_str();
  gen->add_option("--params", gen_opts.parameters)->capture_default_str();
  gen->add_option("--grid", gen_opts.grid)->capture_default_str();
  gen->add_option("--subbasis", gen_opts.subbasis)->capture_default_str();

  auto* repair = app.add_subcommand("repair", "Emit FILE with its topology closed into a valid one");
  repair->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const fss_format fmt = json ? FSS_FORMAT_JSON : FSS_FORMAT_TEXT;
  Owned out;

  if (*validate)
    return with_space(file, [&](fss_space* s) { return finish(fss_validate(s, fmt, &out.text), out); });
  if (*classify)
    return with_space(file, [&](fss_space* s) {
      return finish(fss_classify(s, set_name.c_str(), fmt, &out.text), out);
    });
  for (const auto& o : ops)
    if (*o.cmd)
      return with_space(file, [&](fss_space* s) {
        return finish(fss_apply(s, o.op, set_name.c_str(), fmt, &out.text), out);
      });
  if (*properties)
    return with_space(file, [&](fss_space* s) {
      return finish(fss_properties(s, g_name.c_str(), k_name.c_str(), fmt, &out.text), out);
    });
  if (*points)
    return with_space(file, [&](fss_space* s) {
      return finish(fss_points(s, set_name.c_str(), fmt, &out.text), out);
    });
  if (*repair)
    return with_space(file, [&](fss_space* s) { return finish(fss_repair(s, &out.text), out); });
  if (*search) {
    search_opts.property = property.c_str();
    return finish(fss_search(&search_opts, fmt, &out.text), out);
  }
  if (*fuzz) {
    const auto start = std::chrono::steady_clock::now();
    const auto st = fss_fuzz(&fuzz_opts, fmt, &out.text);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (!json) std::fprintf(stderr, "wall time: %.2f s\n", took.count());
    return finish(st, out);
  }
  if (*gen) return finish(fss_gen(&gen_opts, &out.text), out);
  return 2;
}
