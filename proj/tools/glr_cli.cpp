#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "glr/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  using glr::cli::Command;
  CLI::App app{"Generalized Littlewood-Richardson coefficients for sun quivers"};
  app.require_subcommand(1);

  std::string file;
  bool cross_check = false, plain = false, json_out = false, parallel = false;
  std::string variant;
  std::uint64_t budget = 0;

  struct Sub {
    Command cmd;
    const char* help;
    CLI::App* app = nullptr;
  };
  Sub subs[] = {
      {Command::Lr, "single Littlewood-Richardson coefficient"},
      {Command::F, "cyclic chain sum f for the sun quiver"},
      {Command::F1, "branching coefficient f1"},
      {Command::F2, "crystal coefficient f2"},
      {Command::Positivity, "f > 0 decided by exact LP feasibility"},
      {Command::Cone, "membership in the cone cut out by Horn-type inequalities"},
      {Command::HornGen, "list the subset tuples T(n,m)"},
      {Command::Stretch, "values f(N lambda) for N = 1..N_max"},
      {Command::Factorize, "check f = f(lambda*) f(lambda#) on a wall"},
      {Command::Facets26, "derive the n=2, m=6 facets and compare with the stored list"},
      {Command::Selftest, "run the built-in small exhaustive suites"},
  };
  for (auto& s : subs) {
    s.app = app.add_subcommand(std::string(glr::cli::subcommand_name(s.cmd)), s.help);
    s.app->add_option("--file", file, "problem file (default: standard input)");
    s.app->add_flag("--cross-check", cross_check, "compare independent methods");
    s.app->add_option("--variant", variant, "T(n,m) variant")->check(CLI::IsMember({"one", "nonzero"}));
    s.app->add_option("--budget", budget, "enumeration cap (states or candidate tuples)");
    s.app->add_flag("--parallel", parallel, "evaluate independent branches concurrently");
    auto* j = s.app->add_flag("--json", json_out, "JSON report (default)");
    s.app->add_flag("--plain", plain, "key = value report")->excludes(j);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : glr::cli::kExitInput;
  }

  Command cmd = Command::Selftest;
  for (const auto& s : subs)
    if (s.app->parsed()) cmd = s.cmd;

  glr::cli::RunOptions opts;
  opts.cross_check = cross_check;
  opts.parallel = parallel;
  if (!variant.empty()) opts.variant = variant == "one" ? glr::HornVariant::EqualOne : glr::HornVariant::Nonzero;
  if (budget) opts.budget = budget;

  const bool needs_input = cmd != Command::Facets26 && cmd != Command::Selftest;
  auto read_input = [&]() -> std::string {
    if (!file.empty()) {
      std::ifstream in(file, std::ios::binary);
      if (!in) glr::cli::reject("unreadable_file", "cannot read " + file);
      return read_all(in);
    }
    return needs_input ? read_all(std::cin) : std::string();
  };

  const auto outcome = glr::cli::execute(cmd, read_input, opts);
  std::cout << glr::cli::render(outcome.report, plain);
  if (outcome.exit_code != glr::cli::kExitOk && outcome.report.contains("error"))
    std::cerr << "glr: " << outcome.report["error"]["code"].get<std::string>() << ": "
              << outcome.report["error"]["message"].get<std::string>() << "\n";
  return outcome.exit_code;
}
