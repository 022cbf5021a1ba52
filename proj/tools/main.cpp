#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spinor10/report.hpp"

namespace {

int emit(const spinor10::ReportEnvelope& env, bool json) {
  if (json)
    std::cout << env.to_json().dump(2) << "\n";
  else
    std::cout << env.text();
  return env.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the ten-step tower over the spinor tenfold"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output with stable key order");

  auto* table = app.add_subcommand("table", "pairing table of the fixed reduced word, diffed against the reference");
  table->fallthrough();
  std::string convention = "prefix";
  table->add_option("--gamma-convention", convention, "gamma convention: prefix or suffix")
      ->check(CLI::IsMember({"prefix", "suffix"}));

  auto* classes = app.add_subcommand("classes", "cycle-class enumeration and extremal dimensions per degree");
  classes->fallthrough();
  std::int64_t degree_min = 3, degree_max = 12;
  classes->add_option("--degree-min", degree_min, "lowest degree (>= 3)");
  classes->add_option("--degree-max", degree_max, "highest degree (<= 14)");

  auto* geom = app.add_subcommand("geom", "finite-geometry suite: exhaustive census (q in {2,3}) or seeded sampling");
  geom->fallthrough();
  std::int64_t prime = 101;
  int trials = 1000;
  std::uint64_t seed = 7;
  geom->add_option("--prime", prime, "field characteristic (2 or 3: exhaustive; odd prime <= 2^16: sampling)");
  geom->add_option("--trials", trials, "sampling trials");
  geom->add_option("--seed", seed, "random seed");

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->fallthrough();
  std::uint64_t verify_seed = 7;
  verify->add_option("--seed", verify_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (table->parsed()) {
      spinor10::TableOptions opts;
      opts.convention = convention == "suffix" ? spinor10::GammaConvention::suffix
                                               : spinor10::GammaConvention::prefix;
      return emit(spinor10::cmd_table(opts), json);
    }
    if (classes->parsed()) return emit(spinor10::cmd_classes(degree_min, degree_max), json);
    if (geom->parsed()) return emit(spinor10::cmd_geom(prime, trials, seed), json);
    if (verify->parsed()) return emit(spinor10::cmd_verify_all(verify_seed), json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
