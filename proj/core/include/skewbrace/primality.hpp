#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/products.hpp"

namespace skewbrace {

// One star product in a closure chain: result = left * right (as additive
// subgroups).
struct StarStep {
  ElementSet left;
  ElementSet right;
  ElementSet result;
};

// Why a property fails: the offending ideal(s) and, for the strong
// properties, the star-product chain that reaches {0}.
struct PrimalityWitness {
  std::vector<ElementSet> ideals;
  std::vector<StarStep> chain;
};

struct PropertyResult {
  bool holds = false;
  std::optional<PrimalityWitness> witness;
};

struct PrimalityOptions {
  // Definition-based oracle: quantify over all nonzero ideals instead of the
  // minimal-ideal fast path.
  bool definition_oracle = false;
  // Cap on distinct subgroups in a strong-closure run; 0 means the default
  // (10000, overridable through SKEWBRACE_CLOSURE_CAP).
  int closure_cap = 0;
};

int effective_closure_cap(const PrimalityOptions& options);

// I * I != {0} for every nonzero ideal I.  Fast path checks minimal ideals
// only (every nonzero ideal contains a minimal one and star is monotone).
PropertyResult check_semiprime(const SkewBrace& b,
                               const PrimalityOptions& options = {});
// I * J != {0} for every pair of nonzero ideals.
PropertyResult check_prime(const SkewBrace& b,
                           const PrimalityOptions& options = {});
// No star product of copies of any single nonzero ideal reaches {0}:
// for each nonzero ideal, close {I} under star_subgroup and look for {0}.
PropertyResult check_strongly_semiprime(const SkewBrace& b,
                                        const PrimalityOptions& options = {});
// No star product of nonzero ideals (mixed factors allowed) reaches {0}:
// close the set of all nonzero ideals under star_subgroup.
PropertyResult check_strongly_prime(const SkewBrace& b,
                                    const PrimalityOptions& options = {});

bool is_semiprime(const SkewBrace& b, const PrimalityOptions& options = {});
bool is_prime(const SkewBrace& b, const PrimalityOptions& options = {});
bool is_strongly_semiprime(const SkewBrace& b,
                           const PrimalityOptions& options = {});
bool is_strongly_prime(const SkewBrace& b,
                       const PrimalityOptions& options = {});

struct PrimalityReport {
  PropertyResult semiprime;
  PropertyResult prime;
  PropertyResult strongly_semiprime;
  PropertyResult strongly_prime;
};
// Computes all four properties and verifies the implication chain
// (strongly prime => prime => semiprime, strongly semiprime => semiprime,
// semiprime + finitely many ideals here: strongly prime => strongly
// semiprime) before returning; a violation throws.
PrimalityReport primality_report(const SkewBrace& b,
                                 const PrimalityOptions& options = {});

// Counters over every report built in this process, for test-suite
// verification that no implication violation was ever observed.
uint64_t primality_reports_produced();
uint64_t primality_implication_violations();

// Exactly one nontrivial ideal, which is simple and not a trivial brace as a
// brace in its own right; when it applies the brace is strongly prime.
struct UniqueIdealCriterion {
  bool unique_nontrivial = false;
  bool ideal_simple = false;
  bool ideal_nontrivial_brace = false;  // J * J != {0}
  bool applies = false;
  std::optional<ElementSet> ideal;
};
UniqueIdealCriterion unique_ideal_criterion(const SkewBrace& b);

// Hypothesis checks for the two sufficient conditions on a semidirect
// product of simple braces with nontrivial action.  Preconditions (both
// factors simple, action nontrivial) are enforced with bad_parameters.
// Non-injective action plus trivial multiplicative center of B1:
bool corol1_check(const SemidirectSpec& spec);
// No action[a], a != 0, is an inner multiplicative automorphism of B1:
bool coro2_check(const SemidirectSpec& spec);

// Strong semiprimality of the ideal, of the quotient, and of the whole
// brace; implication_witnessed when both pieces hold (and then whole_holds
// must hold too, enforced here).
struct StrongSemiprimeSplit {
  bool factor_holds = false;
  bool quotient_holds = false;
  bool whole_holds = false;
  bool implication_witnessed = false;
};
StrongSemiprimeSplit strong_semiprime_product_check(
    const SkewBrace& b, const ElementSet& ideal,
    const PrimalityOptions& options = {});

}  // namespace skewbrace
