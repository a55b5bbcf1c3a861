#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/primality.hpp"
#include "skewbrace/products.hpp"
#include "skewbrace/scenarios.hpp"

namespace {

using namespace skewbrace;

// 2 for anything the caller handed us that is malformed, 3 for a configured
// limit stopping the computation.
int exit_code_for(errc code) {
  switch (code) {
    case errc::search_failed:
    case errc::bound_exceeded:
    case errc::cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_validate(const std::string& path, bool exhaustive) {
  SkewBrace b = brace_from_file(
      path, exhaustive ? ValidationMode::exhaustive : ValidationMode::automatic);
  std::cout << validation_report_json(b);
  return 0;
}

int run_ideals(const std::string& path) {
  SkewBrace b = brace_from_file(path);
  std::cout << ideal_report_json(b, all_ideals(b));
  return 0;
}

int run_check(const std::string& path, const std::string& property, bool oracle) {
  SkewBrace b = brace_from_file(path);
  PrimalityOptions options;
  options.definition_oracle = oracle;
  PropertyResult result;
  if (property == "simple")
    result.holds = is_simple(b);
  else if (property == "semiprime")
    result = check_semiprime(b, options);
  else if (property == "prime")
    result = check_prime(b, options);
  else if (property == "strongly-semiprime")
    result = check_strongly_semiprime(b, options);
  else
    result = check_strongly_prime(b, options);
  std::cout << primality_report_json(b, property, result);
  return result.holds ? 0 : 1;
}

int run_semidirect(const std::string& path, bool exhaustive) {
  SemidirectSpec spec = semidirect_spec_from_json(slurp(path));
  SemidirectProduct product = semidirect_product(
      spec, exhaustive ? ValidationMode::exhaustive : ValidationMode::automatic);
  std::cout << semidirect_report_json(product);
  return 0;
}

int run_aut(const std::string& path) {
  SkewBrace b = brace_from_file(path);
  std::cout << automorphism_report_json(b, brace_automorphisms(b));
  return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b) {
  SkewBrace a = brace_from_file(path_a);
  SkewBrace b = brace_from_file(path_b);
  auto witness = are_isomorphic(a, b);
  std::cout << isomorphism_report_json(witness);
  return witness ? 0 : 1;
}

int run_enumerate(int order, const std::string& additive, bool tables) {
  std::optional<std::string> tag;
  EnumerationResult result;
  if (!additive.empty() && std::filesystem::exists(additive)) {
    FiniteGroup g = group_from_json(slurp(additive));
    if (g.order() != order)
      throw error(errc::bad_parameters,
                  "group in " + additive + " has order " +
                      std::to_string(g.order()) + ", not " +
                      std::to_string(order));
    result = enumerate_with_additive({additive, std::move(g)});
    result.complete = false;
  } else {
    if (!additive.empty()) tag = additive;
    result = enumerate_braces(order, tag);
  }
  std::cout << enumeration_report_json(result, tables);
  return 0;
}

int run_verify(const std::string& id, const std::string& import_dir) {
  std::optional<std::string> dir;
  if (!import_dir.empty()) dir = import_dir;
  ScenarioReport report = run_scenario(id, dir);
  std::cout << scenario_report_json(report);
  for (const auto& a : report.assertions)
    if (!a.ok)
      std::cerr << id << ": assertion failed: " << a.name
                << (a.details.empty() ? "" : " (" + a.details + ")") << "\n";
  if (report.status == ScenarioStatus::skipped)
    std::cerr << id << ": SKIPPED: " << report.notes << "\n";
  return report.status == ScenarioStatus::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew left brace workbench"};
  app.require_subcommand(1);

  std::string brace_path, spec_path, iso_a, iso_b, property, additive, import_dir,
      scenario_id;
  bool oracle = false, exhaustive = false, no_tables = false;
  int order = 0;

  auto* validate = app.add_subcommand("validate", "check a brace file");
  validate->add_option("brace", brace_path, "brace file")->required();
  validate->add_flag("--exhaustive", exhaustive, "full cubic law scan");

  auto* ideals = app.add_subcommand("ideals", "list every ideal");
  ideals->add_option("brace", brace_path, "brace file")->required();

  auto* check = app.add_subcommand("check", "decide a primality property");
  check->add_option("brace", brace_path, "brace file")->required();
  check->add_option("--property", property, "property to decide")
      ->required()
      ->check(CLI::IsMember({"simple", "semiprime", "prime",
                             "strongly-semiprime", "strongly-prime"}));
  check->add_flag("--oracle", oracle, "quantify over all ideals");

  auto* semidirect = app.add_subcommand("semidirect", "build a semidirect product");
  semidirect->add_option("spec", spec_path, "spec file")->required();
  semidirect->add_flag("--exhaustive", exhaustive, "full cubic law scan");

  auto* aut = app.add_subcommand("aut", "brace automorphisms");
  aut->add_option("brace", brace_path, "brace file")->required();

  auto* iso = app.add_subcommand("iso", "test two braces for isomorphism");
  iso->add_option("a", iso_a, "first brace file")->required();
  iso->add_option("b", iso_b, "second brace file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "braces of one order");
  enumerate->add_option("--order", order, "brace order")->required();
  enumerate->add_option("--additive", additive,
                        "catalog tag or group JSON path");
  enumerate->add_flag("--no-tables", no_tables, "omit tables from the report");

  auto* verify = app.add_subcommand("verify-paper", "run a named scenario");
  verify->add_option("scenario", scenario_id, "scenario id")->required();
  verify->add_option("--import", import_dir, "directory with exported tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(brace_path, exhaustive);
    if (app.got_subcommand(ideals)) return run_ideals(brace_path);
    if (app.got_subcommand(check)) return run_check(brace_path, property, oracle);
    if (app.got_subcommand(semidirect)) return run_semidirect(spec_path, exhaustive);
    if (app.got_subcommand(aut)) return run_aut(brace_path);
    if (app.got_subcommand(iso)) return run_iso(iso_a, iso_b);
    if (app.got_subcommand(enumerate))
      return run_enumerate(order, additive, !no_tables);
    if (app.got_subcommand(verify)) return run_verify(scenario_id, import_dir);
  } catch (const error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
