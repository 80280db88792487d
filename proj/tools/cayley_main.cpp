#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley/claims.hpp"
#include "cayley/error.hpp"
#include "cayley/report.hpp"

namespace {

int emit(const std::vector<cayley::Report>& reports, const std::string& json_out, bool strict) {
  for (const auto& r : reports) std::cout << r.human_row() << "\n";
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write report file '" << json_out << "'\n";
      return 2;
    }
    out << cayley::reports_to_json(reports);
  }
  int code = cayley::exit_code(reports, strict);
  std::cout << (code == 0 ? "OK" : "FAIL") << " (" << reports.size() << " report"
            << (reports.size() == 1 ? "" : "s") << ")\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cayley: exact verification workbench for composition algebras"};
  app.require_subcommand(1);

  std::string claim, algebra_path, json_out, ring_spec, which;
  uint64_t samples = 1000;
  uint64_t budget = cayley::kDefaultBudget;
  bool exhaustive = false, strict = false;

  CLI::App* verify = app.add_subcommand("verify", "run named claims against an algebra file");
  verify->add_option("--claim", claim, "claim id or 'all'")->required();
  verify->add_option("--algebra", algebra_path, "path to an algebra JSON file")->required();
  CLI::Option* ex_opt = verify->add_flag("--exhaustive", exhaustive, "force exhaustive scans");
  CLI::Option* samples_opt =
      verify->add_option("--samples", samples, "force sampled scans with N samples");
  ex_opt->excludes(samples_opt);
  verify->add_option("--budget", budget, "work budget for scans");
  verify->add_flag("--strict", strict, "treat skipped verdicts as failures");
  verify->add_option("--json", json_out, "write the machine report here");

  CLI::App* nt = app.add_subcommand("norm-theorem",
                                    "quaternion algebras are determined by their norms");
  nt->add_option("--ring", ring_spec, "ring spec: Z, Q, Z/<n>, F<p>")->required();
  nt->add_option("--budget", budget, "work budget");
  nt->add_option("--json", json_out, "write the machine report here");

  CLI::App* grp = app.add_subcommand("group", "enumerate group points");
  grp->add_option("--which", which, "O, SO, SL1, MU2 or AUT")
      ->required()
      ->check(CLI::IsMember({"O", "SO", "SL1", "MU2", "AUT"}));
  grp->add_option("--algebra", algebra_path, "path to an algebra JSON file")->required();
  grp->add_option("--budget", budget, "work budget");
  grp->add_option("--json", json_out, "write the machine report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    std::vector<cayley::Report> reports;
    if (verify->parsed()) {
      cayley::AlgebraRef alg = cayley::AlgebraFile::load(algebra_path).to_algebra();
      cayley::VerifyOptions opt;
      opt.mode = exhaustive ? cayley::VerifyOptions::Mode::exhaustive
                            : (samples_opt->count() ? cayley::VerifyOptions::Mode::sampled
                                                    : cayley::VerifyOptions::Mode::automatic);
      opt.samples = samples;
      opt.budget = budget;
      opt.strict = strict;
      reports = cayley::cmd_verify(claim, alg, opt);
    } else if (nt->parsed()) {
      reports.push_back(cayley::cmd_norm_theorem(cayley::RingSpec::parse(ring_spec), budget));
    } else {
      cayley::AlgebraRef alg = cayley::AlgebraFile::load(algebra_path).to_algebra();
      reports.push_back(cayley::cmd_group(which, alg, budget));
    }
    return emit(reports, json_out, strict);
  } catch (const cayley::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
