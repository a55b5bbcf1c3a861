#pragma once

#include <optional>
#include <string>
#include <vector>

namespace skewbrace {

// Named end-to-end reproductions of the concrete constructions the library
// is built around.  Scenarios that rely on externally exported tables look
// for <id>.json in the import directory and report skipped when absent.
//
//   contro1        order-12 brace with automorphism group of order 2; its
//                  unique nontrivial semidirect product with the trivial C2
//                  brace is semiprime
//   sb24-remark    that order-24 product has a unique nontrivial ideal of
//                  size 12 which is simple and nontrivial, so the product is
//                  strongly prime
//   esem576        simple order-24 brace of abelian type with symmetric
//                  multiplicative group; sign action by conjugation gives a
//                  strongly prime, non-simple product of order 576
//   min48          imported order-48 brace with a unique nontrivial ideal of
//                  size 24 (import required)
//   b81-804        imported order-81 brace: prime but not strongly semiprime
//                  (import required)
//   teokin-sample  semiprime factors give semiprime products, over small
//                  enumerated pairs
//   princi-sample  semiprime products have semiprime left factor
//   lemid-sample   (X+I)*(Y+I) inside (X*Y)+I over sampled subgroups

enum class ScenarioStatus { pass, fail, skipped };

struct ScenarioAssertion {
  std::string name;
  bool ok = false;
  std::string details;
};

struct ScenarioReport {
  std::string id;
  ScenarioStatus status = ScenarioStatus::fail;
  std::vector<ScenarioAssertion> assertions;
  std::string notes;
};

std::vector<std::string> scenario_ids();
ScenarioReport run_scenario(const std::string& id,
                            const std::optional<std::string>& import_dir = {});
std::string scenario_report_json(const ScenarioReport& report);

}  // namespace skewbrace
