// wcav: cyclicity and growth of rational points on Weil-central isogeny classes.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcav/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Weil-central isogeny classes: point counts, extensions, cyclicity and growth sets"};
  app.require_subcommand(1);

  std::string format = "text";
  wcav::CommandOptions options;
  std::optional<unsigned long> rho_budget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--nmax", options.n_max, "Largest extension degree to enumerate")->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for randomized visiting orders (results do not depend on it)");
  app.add_option("--rho-budget", rho_budget, "Pollard-rho iteration budget (overrides WCAV_RHO_BUDGET)");
  app.add_option("--threads", options.threads, "Worker threads for ec-verify (0: all cores)");

  wcav::ClassArgs cls;
  auto add_class = [&cls](CLI::App* sub) {
    sub->add_option("--a", cls.a, "Middle coefficient a")->required();
    sub->add_option("--q", cls.q, "Base field size q = p^r")->required();
    sub->add_option("--g", cls.g, "Dimension g")->required();
    sub->fallthrough();
  };

  std::vector<std::string> primes;
  auto* analyze = app.add_subcommand("analyze", "Point count, cyclicity and local reports of (a,q)_g");
  add_class(analyze);
  analyze->add_option("--l", primes, "Primes to analyze (default: all primes dividing N_1)");

  unsigned long n = 1;
  auto* extend = app.add_subcommand("extend", "Weil polynomial of the degree-n extension");
  add_class(extend);
  extend->add_option("--n", n, "Extension degree")->required();

  std::string l;
  auto* sets = app.add_subcommand("sets", "Growth and cyclic-growth sets with the theorem containments");
  add_class(sets);
  sets->add_option("--l", l, "Prime l")->required();

  auto* table = app.add_subcommand("table", "Reproduce the four worked examples");
  table->fallthrough();

  std::uint32_t p_max = 61;
  auto* ec_verify = app.add_subcommand("ec-verify", "Check the criterion against every elliptic curve over F_p");
  ec_verify->add_option("--pmax", p_max, "Largest prime field")->capture_default_str();
  ec_verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the exit code of every other error; --help stays 0.
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (rho_budget) options.factor.rho_budget = *rho_budget;

  wcav::ReportEnvelope env;
  if (analyze->parsed()) {
    env = wcav::cmd_analyze(cls, primes, options);
  } else if (extend->parsed()) {
    env = wcav::cmd_extend(cls, n, options);
  } else if (sets->parsed()) {
    env = wcav::cmd_sets(cls, l, options);
  } else if (table->parsed()) {
    env = wcav::cmd_table(options);
  } else {
    env = wcav::cmd_ec_verify(p_max, options);
  }
  std::cout << wcav::render(env, wcav::format_from_string(format));
  return wcav::exit_code(env.status);
}
