// fracnoether: run named verification suites and print/write reports.
//
//   fracnoether verify <suite> [options]
//   fracnoether describe <suite>
//
// Every option can also come from FRACNOETHER_<NAME> (e.g. FRACNOETHER_SEED);
// the command line wins. Exit status: 0 all checks pass, 1 a check failed,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fracnoether/fracnoether.hpp"

namespace fs = std::filesystem;
using namespace fracnoether;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::pair<double, double> parse_interval(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidInput("--interval expects a,b");
  std::size_t used = 0;
  const std::string lo = s.substr(0, comma), hi = s.substr(comma + 1);
  double a = 0.0, b = 0.0;
  try {
    a = std::stod(lo, &used);
    if (used != lo.size()) throw InvalidInput("");
    b = std::stod(hi, &used);
    if (used != hi.size()) throw InvalidInput("");
  } catch (const std::exception&) {
    throw InvalidInput("--interval expects two numbers a,b");
  }
  if (!(a < b)) throw InvalidInput("--interval needs a < b");
  return {a, b};
}

void write_file(const fs::path& p, const std::string& contents) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw InvalidInput("cannot write " + p.string());
  os << contents;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for fractional Laplacian identities on the circle and the line"};
  app.require_subcommand(1);

  std::string suite;
  SuiteConfig cfg;
  std::string interval;
  std::string out_dir;
  std::string format = "json";
  std::string input;
  long resolution = 0;
  double tolerance = 0.0;

  auto* verify = app.add_subcommand("verify", "run a suite and report residuals");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--map", cfg.map, "circle map: circle-identity, z2, cos, perturbed")
      ->envname("FRACNOETHER_MAP");
  verify->add_option("--pairs", cfg.pairs, "index pairs: all or i,k (1-based)")->envname("FRACNOETHER_PAIRS");
  verify->add_option("--f", cfg.f, "nonlinearity f(u), polynomial in u or const1")->envname("FRACNOETHER_F");
  verify->add_option("--interval", interval, "support interval a,b")->envname("FRACNOETHER_INTERVAL");
  auto* res_opt = verify->add_option("--resolution", resolution, "suite-specific resolution")
                      ->envname("FRACNOETHER_RESOLUTION")
                      ->check(CLI::PositiveNumber);
  auto* tol_opt = verify->add_option("--tolerance", tolerance, "override the main tolerance")
                      ->envname("FRACNOETHER_TOLERANCE")
                      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed")->envname("FRACNOETHER_SEED");
  verify->add_option("--input", input, "CircleFunction JSON replacing --map")
      ->envname("FRACNOETHER_INPUT")
      ->check(CLI::ExistingFile);
  verify->add_option("--out", out_dir, "directory for report and CSV artifacts")->envname("FRACNOETHER_OUT");
  verify->add_option("--format", format, "report format on stdout and in --out")
      ->envname("FRACNOETHER_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string described;
  auto* describe = app.add_subcommand("describe", "print the anchors and tolerances of a suite");
  describe->add_option("suite", described, "suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*describe) {
    try {
      std::cout << describe_suite(described);
      return kExitPass;
    } catch (const InvalidInput& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  cfg.suite = suite;
  try {
    if (!interval.empty()) std::tie(cfg.a, cfg.b) = parse_interval(interval);
    if (!res_opt->empty()) cfg.resolution = resolution;
    if (!tol_opt->empty()) cfg.tolerance = tolerance;
    if (!input.empty()) {
      std::ifstream is(input);
      cfg.input = circle_function_from_json(parse_json(is));
    }
    // validates the expression before any work is done
    (void)Nonlinearity(cfg.f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  SuiteOutput result;
  try {
    result = run_suite(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // solver or quadrature failure is a failed verification
    result.reports.push_back(make_check("suite_error", {{"message", e.what()}},
                                        std::numeric_limits<double>::quiet_NaN(), 0.0, 0));
  }

  std::string report;
  if (format == "csv") {
    std::ostringstream os;
    write_reports_csv(os, result.reports);
    report = os.str();
  } else {
    report = dump(to_json(result.reports));
  }
  std::cout << report;

  if (!out_dir.empty()) {
    try {
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / (suite + "_report." + format), report);
      for (const auto& [name, contents] : result.artifacts) write_file(fs::path(out_dir) / name, contents);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return result.pass() ? kExitPass : kExitFail;
}
