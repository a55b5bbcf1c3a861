#include "skewbrace/scenarios.hpp"

#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/primality.hpp"
#include "skewbrace/products.hpp"

namespace skewbrace {
namespace {

struct Recorder {
  ScenarioReport report;

  bool check(const std::string& name, bool ok, std::string details = "") {
    report.assertions.push_back({name, ok, std::move(details)});
    return ok;
  }
  void finish() {
    report.status = ScenarioStatus::pass;
    for (const auto& a : report.assertions)
      if (!a.ok) report.status = ScenarioStatus::fail;
  }
};

bool map_is_identity(const BraceMap& m) {
  for (int x = 0; x < m.size(); ++x)
    if (m(x) != x) return false;
  return true;
}

bool map_is_involution(const BraceMap& m) {
  for (int x = 0; x < m.size(); ++x)
    if (m(m(x)) != x) return false;
  return true;
}

// The simple nontrivial order-12 brace with exactly two brace automorphisms,
// and its unique nontrivial semidirect product with the trivial C2 brace.
// The selection matches an opposite pair of classes; the canonical-first
// representative is used.
struct Contro1Artifacts {
  std::optional<SkewBrace> b1;
  std::vector<SkewBrace> matches;
  bool matches_are_opposite = false;
  int action_count = 0;
  std::optional<SemidirectSpec> spec;
  std::optional<SemidirectProduct> product;
  std::string failure;
};

const Contro1Artifacts& contro1_artifacts() {
  static const Contro1Artifacts cached = [] {
    Contro1Artifacts out;
    EnumerationResult all = enumerate_braces(12);
    for (const auto& cls : all.classes) {
      if (cls.rep.is_trivial() || !is_simple(cls.rep)) continue;
      if (static_cast<int>(brace_automorphisms(cls.rep).size()) != 2) continue;
      out.matches.push_back(cls.rep);
    }
    if (out.matches.empty()) {
      out.failure =
          "no simple nontrivial order-12 brace with automorphism group of "
          "order 2";
      return out;
    }
    out.b1 = out.matches.front();
    if (out.matches.size() == 2) {
      const SkewBrace& first = out.matches[0];
      int n = first.order();
      std::vector<std::vector<int>> rows(n, std::vector<int>(n));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rows[x][y] = first.add().op(y, x);
      SkewBrace opposite = make_brace(FiniteGroup::from_table(rows), first.mul());
      out.matches_are_opposite =
          are_isomorphic(opposite, out.matches[1]).has_value();
    }
    SkewBrace b2 = trivial_brace(make_cyclic(2));
    auto actions = enumerate_actions(*out.b1, b2);
    out.action_count = static_cast<int>(actions.size());
    for (auto& spec : actions) {
      if (action_is_trivial(spec)) continue;
      out.spec = spec;
      out.product = semidirect_product(spec);
      break;
    }
    if (!out.product) out.failure = "no nontrivial action on the selected brace";
    return out;
  }();
  return cached;
}

ScenarioReport scenario_contro1() {
  Recorder rec;
  rec.report.id = "contro1";
  const auto& art = contro1_artifacts();
  rec.check("selection_is_one_opposite_pair",
            art.matches.size() == 2 && art.matches_are_opposite,
            "matches: " + std::to_string(art.matches.size()));
  if (!art.product) {
    rec.report.notes = art.failure;
    rec.check("product_built", false, art.failure);
    rec.finish();
    return rec.report;
  }
  rec.check("exactly_one_nontrivial_action", art.action_count == 2,
            "actions including the trivial one: " +
                std::to_string(art.action_count));
  rec.check("product_semiprime", is_semiprime(art.product->brace));
  SkewBrace b2 = trivial_brace(make_cyclic(2));
  ElementSet b2_star = star_subgroup(b2, ElementSet::whole(2), ElementSet::whole(2));
  rec.check("b2_star_b2_is_zero", b2_star.is_zero());
  rec.check("b2_not_semiprime", !is_semiprime(b2),
            "semiprimality of the product does not pass to the acting factor");
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_sb24() {
  Recorder rec;
  rec.report.id = "sb24-remark";
  const auto& art = contro1_artifacts();
  if (!art.product) {
    rec.report.notes = art.failure;
    rec.check("product_built", false, art.failure);
    rec.finish();
    return rec.report;
  }
  const SkewBrace& b = art.product->brace;
  rec.check("order_24", b.order() == 24);
  UniqueIdealCriterion crit = unique_ideal_criterion(b);
  rec.check("unique_nontrivial_ideal", crit.unique_nontrivial);
  rec.check("ideal_size_12", crit.ideal && crit.ideal->size() == 12,
            crit.ideal ? "size " + std::to_string(crit.ideal->size()) : "absent");
  rec.check("ideal_simple", crit.ideal_simple);
  rec.check("ideal_nontrivial_brace", crit.ideal_nontrivial_brace);
  rec.check("criterion_applies", crit.applies);
  rec.check("strongly_prime", is_strongly_prime(b));
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_esem576() {
  Recorder rec;
  rec.report.id = "esem576";
  SimpleS4Result found = find_simple_abelian_s4();
  rec.check("simple_s4_brace_found", true,
            "additive group " + found.additive_name + ", " +
                std::to_string(found.simple_s4_classes) + " class(es)");
  rec.check("one_involution_with_inner_brace_map", found.b_candidates == 1,
            "candidates: " + std::to_string(found.b_candidates));
  const SkewBrace& b1 = found.brace;
  BraceMap tau = inner_mult_automorphism(b1, found.b);
  rec.check("tau_preserves_both_operations",
            tau.preserves_add && tau.preserves_mul);
  rec.check("tau_has_order_two",
            map_is_involution(tau) && !map_is_identity(tau));

  // The acting factor is a second copy of the same simple brace; the action
  // factors through the sign of its symmetric multiplicative group.
  SemidirectSpec spec = build_sign_action(b1, b1, tau);
  ElementSet kernel = action_kernel(spec);
  rec.check("action_kernel_has_index_two", kernel.size() == 12,
            "kernel size " + std::to_string(kernel.size()));
  rec.check("corol1_hypotheses_hold", corol1_check(spec));

  SemidirectProduct product = semidirect_product(spec, ValidationMode::exhaustive);
  rec.check("order_576", product.brace.order() == 576);

  auto ideals = all_ideals(product.brace);
  std::vector<ElementSet> nontrivial;
  for (const auto& h : ideals)
    if (!h.set.is_zero() && !h.set.is_whole()) nontrivial.push_back(h.set);
  rec.check("exactly_one_nontrivial_ideal", nontrivial.size() == 1,
            std::to_string(nontrivial.size()) + " nontrivial ideal(s)");
  rec.check("ideal_is_left_factor",
            nontrivial.size() == 1 && nontrivial[0] == product.left_factor);
  rec.check("non_simple", !nontrivial.empty());

  UniqueIdealCriterion crit = unique_ideal_criterion(product.brace);
  rec.check("unique_ideal_criterion_applies", crit.applies);
  rec.check("strongly_prime_by_closure", is_strongly_prime(product.brace));
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_min48(const std::optional<std::string>& import_dir) {
  Recorder rec;
  rec.report.id = "min48";
  std::string path = (import_dir ? *import_dir : std::string(".")) + "/min48.json";
  if (!import_dir || !std::filesystem::exists(path)) {
    rec.report.status = ScenarioStatus::skipped;
    rec.report.notes = "import file " + path + " not found";
    return rec.report;
  }
  SkewBrace b = brace_from_file(path);
  rec.check("order_48", b.order() == 48);
  UniqueIdealCriterion crit = unique_ideal_criterion(b);
  rec.check("unique_nontrivial_ideal", crit.unique_nontrivial);
  rec.check("ideal_size_24", crit.ideal && crit.ideal->size() == 24,
            crit.ideal ? "size " + std::to_string(crit.ideal->size()) : "absent");
  rec.check("ideal_simple", crit.ideal_simple);
  rec.check("ideal_nontrivial_brace", crit.ideal_nontrivial_brace);
  rec.check("strongly_prime", is_strongly_prime(b));
  if (!crit.ideal || crit.ideal->size() != 24) {
    rec.finish();
    return rec.report;
  }

  // Were b a semidirect product, it would have to be I with the trivial C2
  // brace acting; the unique candidate product has an ideal of size 2 and b
  // has none, so no such decomposition exists.
  SkewBrace ideal_brace = sub_brace(b, *crit.ideal);
  SkewBrace c2 = trivial_brace(make_cyclic(2));
  auto actions = enumerate_actions(ideal_brace, c2);
  int nontrivial_actions = 0;
  std::optional<SemidirectProduct> candidate;
  for (auto& spec : actions) {
    if (action_is_trivial(spec)) continue;
    ++nontrivial_actions;
    if (!candidate) candidate = semidirect_product(spec);
  }
  rec.check("one_nontrivial_action_on_ideal", nontrivial_actions == 1,
            std::to_string(nontrivial_actions) + " nontrivial action(s)");
  bool candidate_has_size2 = false;
  if (candidate)
    for (const auto& h : all_ideals(candidate->brace))
      if (h.set.size() == 2) candidate_has_size2 = true;
  rec.check("candidate_product_has_size_2_ideal", candidate_has_size2);
  bool b_has_size2 = false;
  for (const auto& h : all_ideals(b))
    if (h.set.size() == 2) b_has_size2 = true;
  rec.check("imported_brace_has_no_size_2_ideal", !b_has_size2);
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_b81(const std::optional<std::string>& import_dir) {
  Recorder rec;
  rec.report.id = "b81-804";
  std::string path = (import_dir ? *import_dir : std::string(".")) + "/b81-804.json";
  if (!import_dir || !std::filesystem::exists(path)) {
    rec.report.status = ScenarioStatus::skipped;
    rec.report.notes = "import file " + path + " not found";
    return rec.report;
  }
  SkewBrace b = brace_from_file(path);
  rec.check("order_81", b.order() == 81);
  int n = b.order();
  ElementSet star = star_subgroup(b, ElementSet::whole(n), ElementSet::whole(n));
  rec.check("star_is_proper_and_nonzero", !star.is_zero() && !star.is_whole(),
            "|B*B| = " + std::to_string(star.size()));
  auto ideals = all_ideals(b);
  std::vector<ElementSet> nontrivial;
  for (const auto& h : ideals)
    if (!h.set.is_zero() && !h.set.is_whole()) nontrivial.push_back(h.set);
  rec.check("only_nontrivial_ideal_is_star",
            nontrivial.size() == 1 && nontrivial[0] == star,
            std::to_string(nontrivial.size()) + " nontrivial ideal(s)");
  rec.check("prime", is_prime(b));
  rec.check("not_strongly_semiprime", !is_strongly_semiprime(b));
  rec.finish();
  return rec.report;
}

// Semidirect products over enumerated factor pairs with product order at
// most 48, shared by the two sampling scenarios.  No brace of prime-power
// order is semiprime (nilpotent multiplicative group forces left
// nilpotency), so pairs of semiprime factors first appear at 12 x 12 and get
// a dedicated pass in the first scenario.
struct SweepEntry {
  bool b1_semiprime = false;
  bool b2_semiprime = false;
  bool product_semiprime = false;
};

const std::vector<SweepEntry>& product_sweep() {
  static const std::vector<SweepEntry> cached = [] {
    std::vector<SweepEntry> out;
    std::vector<int> orders = {2, 3, 4, 6, 8, 12};
    std::vector<SkewBrace> factors;
    for (int n : orders)
      for (const auto& cls : enumerate_braces(n).classes) factors.push_back(cls.rep);
    for (const auto& b1 : factors)
      for (const auto& b2 : factors) {
        if (b1.order() * b2.order() > 48) continue;
        bool s1 = is_semiprime(b1);
        bool s2 = is_semiprime(b2);
        for (auto& spec : enumerate_actions(b1, b2)) {
          SemidirectProduct product = semidirect_product(spec);
          out.push_back({s1, s2, is_semiprime(product.brace)});
        }
      }
    return out;
  }();
  return cached;
}

ScenarioReport scenario_teokin() {
  Recorder rec;
  rec.report.id = "teokin-sample";
  const auto& sweep = product_sweep();
  int violations = 0;
  for (const auto& e : sweep)
    if (e.b1_semiprime && e.b2_semiprime && !e.product_semiprime) ++violations;
  rec.check("no_violation_below_order_48", violations == 0,
            std::to_string(sweep.size()) + " products, " +
                std::to_string(violations) + " violation(s)");

  std::vector<SkewBrace> semiprime_factors;
  for (const auto& cls : enumerate_braces(12).classes)
    if (is_semiprime(cls.rep)) semiprime_factors.push_back(cls.rep);
  rec.check("semiprime_factors_exist", !semiprime_factors.empty(),
            std::to_string(semiprime_factors.size()) +
                " semiprime brace(s) of order 12");
  int products = 0;
  int big_violations = 0;
  for (const auto& b1 : semiprime_factors)
    for (const auto& b2 : semiprime_factors)
      for (auto& spec : enumerate_actions(b1, b2)) {
        SemidirectProduct product = semidirect_product(spec);
        ++products;
        if (!is_semiprime(product.brace)) ++big_violations;
      }
  rec.check("semiprime_pair_products_semiprime",
            products > 0 && big_violations == 0,
            std::to_string(products) + " order-144 product(s), " +
                std::to_string(big_violations) + " violation(s)");
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_princi() {
  Recorder rec;
  rec.report.id = "princi-sample";
  const auto& sweep = product_sweep();
  int applicable = 0;
  int violations = 0;
  for (const auto& e : sweep) {
    if (!e.product_semiprime) continue;
    ++applicable;
    if (!e.b1_semiprime) ++violations;
  }
  rec.check("semiprime_products_found", applicable > 0,
            std::to_string(sweep.size()) + " products, " +
                std::to_string(applicable) + " semiprime");
  rec.check("semiprime_product_has_semiprime_left_factor", violations == 0,
            std::to_string(violations) + " violation(s)");
  rec.finish();
  return rec.report;
}

ScenarioReport scenario_lemid() {
  Recorder rec;
  rec.report.id = "lemid-sample";
  std::mt19937 rng(0xC0FFEE);
  int samples = 0;
  int violations = 0;
  int braces = 0;
  for (int n : {4, 6, 8}) {
    for (const auto& cls : enumerate_braces(n).classes) {
      const SkewBrace& b = cls.rep;
      ++braces;
      auto ideals = all_ideals(b);
      auto random_subgroup = [&] {
        std::uniform_int_distribution<int> pick(0, b.order() - 1);
        std::vector<uint16_t> gens = {static_cast<uint16_t>(pick(rng))};
        if (pick(rng) % 2) gens.push_back(static_cast<uint16_t>(pick(rng)));
        return subgroup_closure(b.add(), ElementSet(gens, b.order()));
      };
      auto plus = [&](const ElementSet& x, const ElementSet& i) {
        std::vector<uint16_t> u = x.elements();
        for (uint16_t v : i.elements()) u.push_back(v);
        return subgroup_closure(b.add(), ElementSet(u, b.order()));
      };
      for (const auto& h : ideals) {
        for (int trial = 0; trial < 12; ++trial) {
          ElementSet x = random_subgroup();
          ElementSet y = random_subgroup();
          ElementSet lhs = star_subgroup(b, plus(x, h.set), plus(y, h.set));
          ElementSet rhs = plus(star_subgroup(b, x, y), h.set);
          ++samples;
          if (!lhs.subset_of(rhs)) ++violations;
        }
      }
    }
  }
  rec.check("at_least_1000_samples", samples >= 1000,
            std::to_string(samples) + " samples over " + std::to_string(braces) +
                " braces");
  rec.check("sum_star_containment", violations == 0,
            std::to_string(violations) + " violation(s)");
  rec.finish();
  return rec.report;
}

}  // namespace

std::vector<std::string> scenario_ids() {
  return {"contro1",  "sb24-remark",   "esem576",       "min48",
          "b81-804",  "teokin-sample", "princi-sample", "lemid-sample"};
}

ScenarioReport run_scenario(const std::string& id,
                            const std::optional<std::string>& import_dir) {
  try {
    if (id == "contro1") return scenario_contro1();
    if (id == "sb24-remark") return scenario_sb24();
    if (id == "esem576") return scenario_esem576();
    if (id == "min48") return scenario_min48(import_dir);
    if (id == "b81-804") return scenario_b81(import_dir);
    if (id == "teokin-sample") return scenario_teokin();
    if (id == "princi-sample") return scenario_princi();
    if (id == "lemid-sample") return scenario_lemid();
  } catch (const error& e) {
    ScenarioReport report;
    report.id = id;
    report.status = ScenarioStatus::fail;
    report.assertions.push_back({"no_library_error", false, e.what()});
    report.notes = std::string(errc_name(e.code())) + ": " + e.what();
    return report;
  }
  throw error(errc::unknown_scenario, "unknown scenario " + id);
}

std::string scenario_report_json(const ScenarioReport& report) {
  nlohmann::json j;
  j["id"] = report.id;
  j["status"] = report.status == ScenarioStatus::pass      ? "PASS"
                : report.status == ScenarioStatus::skipped ? "SKIPPED"
                                                           : "FAIL";
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : report.assertions) {
    nlohmann::json ja;
    ja["name"] = a.name;
    ja["ok"] = a.ok;
    ja["details"] = a.details;
    list.push_back(std::move(ja));
  }
  j["assertions"] = std::move(list);
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

}  // namespace skewbrace
