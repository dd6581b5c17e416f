// ihull: command-line front end over the C interface.
//
// exit codes: 0 ok, 1 input or validation error, 2 verification failure,
// 3 resource cap exceeded.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ihull.h"

namespace {

int exit_code(ihull_status s) {
  switch (s) {
    case IHULL_OK: return 0;
    case IHULL_E_VERIFY: return 2;
    case IHULL_E_CAP:
    case IHULL_E_BUDGET: return 3;
    default: return 1;
  }
}

struct Handle {
  ihull_semigroup* h = nullptr;
  ~Handle() { ihull_free(h); }
};

int report_error(ihull_status s) {
  std::fprintf(stderr, "ihull: %s: %s\n", ihull_status_name(s), ihull_last_error());
  return exit_code(s);
}

int finish(ihull_status s, char* report) {
  if (report) {
    std::fputs(report, stdout);
    ihull_string_free(report);
  }
  if (s == IHULL_E_VERIFY) {
    std::fprintf(stderr, "ihull: %s\n", ihull_last_error());
    return 2;
  }
  return s == IHULL_OK ? 0 : report_error(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse hulls, strings and tight spectra of finite 0-left cancellative semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  ihull_options opts;
  ihull_options_init(&opts);
  bool json = false, oracle = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--oracle", oracle, "cross-check against brute-force enumeration");
  app.add_option("--max-hull", opts.max_hull, "hull size cap")->check(CLI::PositiveNumber);
  app.add_option("--max-cover", opts.max_cover, "largest lower set searched for covers")->check(CLI::PositiveNumber);

  std::string input;
  const char* help[][2] = {{"props", "cancellation flags, table, element classes, lcms"},
                           {"hull", "elements of the inverse hull with normal forms"},
                           {"constructible", "constructible sets"},
                           {"strings", "strings and their star domains"},
                           {"spectrum", "semilattice, characters, tightness"},
                           {"census", "ultracharacters split into open and non-open"},
                           {"verify", "run the invariant suites"}};
  std::string suite;
  std::vector<CLI::App*> plain;
  for (auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("input", input, "input file or fixture:NAME")->required();
    if (std::string(name) == "verify") sub->add_option("--suite", suite, "comma-separated suite names");
    plain.push_back(sub);
  }

  std::string fm, fn;
  std::vector<std::string> exprs;
  CLI::App* fp = app.add_subcommand("freeprod", "normal forms and lcms in the 0-free product M *_0 N");
  fp->add_option("M", fm, "first factor (monoid with zero)")->required();
  fp->add_option("N", fn, "second factor (monoid with zero)")->required();
  fp->add_option("expr", exprs, "products like 'a.M * b.N', or lcm queries 'x | y'")->required();
  fp->add_option("--bound", opts.syllable_bound, "syllable bound for lcm verification")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  opts.json = json;
  opts.oracle = oracle;
  if (!suite.empty()) opts.suite = suite.c_str();

  if (fp->parsed()) {
    Handle m, n;
    if (ihull_status s = ihull_load(fm.c_str(), &m.h); s != IHULL_OK) return report_error(s);
    if (ihull_status s = ihull_load(fn.c_str(), &n.h); s != IHULL_OK) return report_error(s);
    std::vector<const char*> raw;
    for (const auto& e : exprs) raw.push_back(e.c_str());
    char* report = nullptr;
    ihull_status s = ihull_freeprod(m.h, n.h, raw.data(), raw.size(), &opts, &report);
    return finish(s, report);
  }

  for (CLI::App* sub : plain) {
    if (!sub->parsed()) continue;
    Handle h;
    if (ihull_status s = ihull_load(input.c_str(), &h.h); s != IHULL_OK) return report_error(s);
    char* report = nullptr;
    ihull_status s = ihull_run(h.h, sub->get_name().c_str(), &opts, &report);
    return finish(s, report);
  }
  return 1;
}
