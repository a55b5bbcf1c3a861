#include "skewbrace/primality.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace skewbrace {

namespace {

std::atomic<uint64_t> reports_produced{0};
std::atomic<uint64_t> implication_violations{0};

std::vector<ElementSet> nonzero_sets(const SkewBrace& b, bool all) {
  std::vector<ElementSet> out;
  if (all) {
    for (auto& h : all_ideals(b))
      if (!h.set.is_zero()) out.push_back(std::move(h.set));
  } else {
    for (auto& h : minimal_ideals(b)) out.push_back(std::move(h.set));
  }
  return out;
}

PropertyResult fail_with(std::vector<ElementSet> ideals,
                         std::vector<StarStep> chain) {
  PropertyResult r;
  r.holds = false;
  r.witness = PrimalityWitness{std::move(ideals), std::move(chain)};
  return r;
}

PropertyResult semiprime_impl(const SkewBrace& b,
                              const std::vector<ElementSet>& seeds) {
  for (const auto& i : seeds) {
    ElementSet p = star_subgroup(b, i, i);
    if (p.is_zero()) return fail_with({i}, {StarStep{i, i, p}});
  }
  return {true, std::nullopt};
}

PropertyResult prime_impl(const SkewBrace& b,
                          const std::vector<ElementSet>& seeds) {
  for (const auto& i : seeds)
    for (const auto& j : seeds) {
      ElementSet p = star_subgroup(b, i, j);
      if (p.is_zero()) return fail_with({i, j}, {StarStep{i, j, p}});
    }
  return {true, std::nullopt};
}

struct ClosureOutcome {
  bool hit_zero = false;
  std::vector<StarStep> chain;
};

// Closes the seed subgroups under the binary star product, tracking parents
// so a vanishing product can be replayed step by step.
ClosureOutcome star_closure(const SkewBrace& b,
                            const std::vector<ElementSet>& seeds, int cap) {
  std::vector<ElementSet> known;
  std::vector<std::pair<int, int>> parent;
  std::map<ElementSet, int> index;
  std::vector<int> queue;
  auto add = [&](ElementSet s, int pi, int pj) -> int {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (static_cast<int>(known.size()) >= cap)
      throw error(errc::cap_exceeded,
                  "star closure exceeded the cap of " + std::to_string(cap) +
                      " subgroups");
    int id = static_cast<int>(known.size());
    index.emplace(s, id);
    known.push_back(std::move(s));
    parent.emplace_back(pi, pj);
    queue.push_back(id);
    return id;
  };
  for (const auto& s : seeds) add(s, -1, -1);
  int zero_id = -1;
  for (size_t head = 0; head < queue.size() && zero_id < 0; ++head) {
    int k = queue[head];
    for (int m = 0; m < static_cast<int>(known.size()) && zero_id < 0; ++m) {
      for (auto [i, j] : {std::pair{k, m}, std::pair{m, k}}) {
        ElementSet p = star_subgroup(b, known[i], known[j]);
        bool zero = p.is_zero();
        int id = add(std::move(p), i, j);
        if (zero) {
          zero_id = id;
          break;
        }
      }
    }
  }
  ClosureOutcome out;
  if (zero_id < 0) return out;
  out.hit_zero = true;
  std::set<int> visited;
  auto emit = [&](auto&& self, int id) -> void {
    auto [pi, pj] = parent[id];
    if (pi < 0 || visited.count(id)) return;
    visited.insert(id);
    self(self, pi);
    self(self, pj);
    out.chain.push_back(StarStep{known[pi], known[pj], known[id]});
  };
  emit(emit, zero_id);
  return out;
}

PropertyResult strongly_semiprime_impl(const SkewBrace& b,
                                       const std::vector<ElementSet>& seeds,
                                       int cap) {
  for (const auto& i : seeds) {
    ClosureOutcome c = star_closure(b, {i}, cap);
    if (c.hit_zero) return fail_with({i}, std::move(c.chain));
  }
  return {true, std::nullopt};
}

PropertyResult strongly_prime_impl(const SkewBrace& b,
                                   const std::vector<ElementSet>& seeds,
                                   int cap) {
  ClosureOutcome c = star_closure(b, seeds, cap);
  if (c.hit_zero) return fail_with(seeds, std::move(c.chain));
  return {true, std::nullopt};
}

}  // namespace

int effective_closure_cap(const PrimalityOptions& options) {
  if (options.closure_cap > 0) return options.closure_cap;
  if (const char* env = std::getenv("SKEWBRACE_CLOSURE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10000;
}

PropertyResult check_semiprime(const SkewBrace& b,
                               const PrimalityOptions& options) {
  return semiprime_impl(b, nonzero_sets(b, options.definition_oracle));
}

PropertyResult check_prime(const SkewBrace& b, const PrimalityOptions& options) {
  return prime_impl(b, nonzero_sets(b, options.definition_oracle));
}

PropertyResult check_strongly_semiprime(const SkewBrace& b,
                                        const PrimalityOptions& options) {
  return strongly_semiprime_impl(b, nonzero_sets(b, options.definition_oracle),
                                 effective_closure_cap(options));
}

PropertyResult check_strongly_prime(const SkewBrace& b,
                                    const PrimalityOptions& options) {
  return strongly_prime_impl(b, nonzero_sets(b, options.definition_oracle),
                             effective_closure_cap(options));
}

bool is_semiprime(const SkewBrace& b, const PrimalityOptions& options) {
  return check_semiprime(b, options).holds;
}
bool is_prime(const SkewBrace& b, const PrimalityOptions& options) {
  return check_prime(b, options).holds;
}
bool is_strongly_semiprime(const SkewBrace& b, const PrimalityOptions& options) {
  return check_strongly_semiprime(b, options).holds;
}
bool is_strongly_prime(const SkewBrace& b, const PrimalityOptions& options) {
  return check_strongly_prime(b, options).holds;
}

PrimalityReport primality_report(const SkewBrace& b,
                                 const PrimalityOptions& options) {
  auto seeds = nonzero_sets(b, options.definition_oracle);
  int cap = effective_closure_cap(options);
  PrimalityReport rep{semiprime_impl(b, seeds), prime_impl(b, seeds),
                      strongly_semiprime_impl(b, seeds, cap),
                      strongly_prime_impl(b, seeds, cap)};
  ++reports_produced;
  bool ok = (!rep.strongly_prime.holds || rep.prime.holds) &&
            (!rep.prime.holds || rep.semiprime.holds) &&
            (!rep.strongly_semiprime.holds || rep.semiprime.holds) &&
            (!rep.strongly_prime.holds || rep.strongly_semiprime.holds);
  if (!ok) {
    ++implication_violations;
    throw std::logic_error("primality implication chain violated");
  }
  return rep;
}

uint64_t primality_reports_produced() { return reports_produced.load(); }
uint64_t primality_implication_violations() {
  return implication_violations.load();
}

UniqueIdealCriterion unique_ideal_criterion(const SkewBrace& b) {
  UniqueIdealCriterion crit;
  std::vector<ElementSet> nontrivial;
  for (auto& h : all_ideals(b))
    if (!h.set.is_zero() && !h.set.is_whole()) nontrivial.push_back(h.set);
  crit.unique_nontrivial = nontrivial.size() == 1;
  if (!crit.unique_nontrivial) return crit;
  crit.ideal = nontrivial.front();
  crit.ideal_simple = is_simple(sub_brace(b, *crit.ideal));
  crit.ideal_nontrivial_brace =
      !star_subgroup(b, *crit.ideal, *crit.ideal).is_zero();
  crit.applies = crit.ideal_simple && crit.ideal_nontrivial_brace;
  return crit;
}

namespace {

void require_simple_nontrivial_action(const SemidirectSpec& spec) {
  if (!is_simple(spec.b1) || !is_simple(spec.b2))
    throw error(errc::bad_parameters, "both factors must be simple");
  if (action_is_trivial(spec))
    throw error(errc::bad_parameters, "action must be nontrivial");
}

}  // namespace

bool corol1_check(const SemidirectSpec& spec) {
  require_simple_nontrivial_action(spec);
  return action_kernel(spec).size() > 1 &&
         center(spec.b1.mul()).size() == 1;
}

bool coro2_check(const SemidirectSpec& spec) {
  require_simple_nontrivial_action(spec);
  std::set<std::vector<uint16_t>> inner;
  for (int g = 0; g < spec.b1.order(); ++g)
    inner.insert(inner_mult_automorphism(spec.b1, g).mapping);
  for (int a = 1; a < spec.b2.order(); ++a)
    if (inner.count(spec.action[a])) return false;
  return true;
}

StrongSemiprimeSplit strong_semiprime_product_check(
    const SkewBrace& b, const ElementSet& ideal,
    const PrimalityOptions& options) {
  if (!is_ideal(b, ideal))
    throw error(errc::not_an_ideal, "split check needs an ideal");
  StrongSemiprimeSplit split;
  split.factor_holds = is_strongly_semiprime(sub_brace(b, ideal), options);
  split.quotient_holds =
      is_strongly_semiprime(quotient_brace(b, ideal).brace, options);
  split.whole_holds = is_strongly_semiprime(b, options);
  split.implication_witnessed = split.factor_holds && split.quotient_holds;
  if (split.implication_witnessed && !split.whole_holds)
    throw std::logic_error(
        "strongly semiprime pieces with a non-strongly-semiprime whole");
  return split;
}

}  // namespace skewbrace
