// thin command-line front end; everything real sits behind the C interface
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kani.h"

namespace {

int emit(kani_result* r, bool machine) {
  if (!r) {
    const char* msg = kani_last_error();
    std::fprintf(stderr, "error: %s\n", msg ? msg : "unknown failure");
    return 2;
  }
  std::fputs(machine ? kani_result_machine(r) : kani_result_human(r), stdout);
  int rc = kani_result_exit_code(r);
  kani_result_free(r);
  return rc;
}

bool slurp(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong solvability of relative embedding problems for curve covers"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = 0;
  uint32_t field_cap = 12, group_cap = 2000;
  bool machine = false, trace = false;
  app.add_option("--seed", seed, "seed for canonical basis choices");
  app.add_option("--field-cap", field_cap, "largest splitting field degree");
  app.add_option("--group-cap", group_cap, "largest group order the engine will build");
  app.add_flag("--machine", machine, "print the json report instead of text");
  app.add_flag("--trace", trace, "append per-step slack tables to decide output");

  std::string groupref, moduleref, file;
  uint32_t p = 0;

  CLI::App* simples = app.add_subcommand("simples", "list the simple modules over F_p");
  simples->add_option("group", groupref, "group shortcut or perm: spec")->required();
  simples->add_option("p", p, "the characteristic")->required();

  CLI::App* cohom = app.add_subcommand("cohom", "h0, h1, h2 of a module");
  cohom->add_option("group", groupref, "group shortcut or perm: spec")->required();
  cohom->add_option("p", p, "the characteristic")->required();
  cohom->add_option("module", moduleref, "trivial, regular or simple<i>")->required();

  CLI::App* decide = app.add_subcommand("decide", "decide a problem file (path or -)");
  decide->add_option("file", file, "problem file")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "show the reduction route of a problem file");
  reduce->add_option("file", file, "problem file")->required();

  app.add_subcommand("selftest", "run the acceptance battery");

  CLI11_PARSE(app, argc, argv);

  char opts[160];
  std::snprintf(opts, sizeof opts, "{\"seed\": %llu, \"field_cap\": %u, \"group_cap\": %u}",
                static_cast<unsigned long long>(seed), field_cap, group_cap);

  kani_result* r = nullptr;
  if (app.got_subcommand(simples)) {
    r = kani_run_simples(groupref.c_str(), p, opts);
  } else if (app.got_subcommand(cohom)) {
    r = kani_run_cohom(groupref.c_str(), p, moduleref.c_str(), opts);
  } else if (app.got_subcommand(decide) || app.got_subcommand(reduce)) {
    std::string text;
    if (!slurp(file, text)) {
      std::fprintf(stderr, "error: cannot read '%s'\n", file.c_str());
      return 2;
    }
    r = app.got_subcommand(decide) ? kani_run_decide(text.c_str(), trace ? 1 : 0, opts)
                                   : kani_run_reduce(text.c_str(), opts);
  } else {
    r = kani_run_selftest(opts);
  }
  return emit(r, machine);
}
