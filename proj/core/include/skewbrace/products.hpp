#pragma once

#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/ideals.hpp"

namespace skewbrace {

// Semidirect product data: b2 acting on b1 by brace automorphisms.
// action[a2] is the automorphism applied by a2; a2 -> action[a2] must be a
// homomorphism from (B2, o) to the brace automorphism group of B1, with
// composition action[a o b] = action[a] after action[b].
struct SemidirectSpec {
  SkewBrace b1;
  SkewBrace b2;
  std::vector<std::vector<uint16_t>> action;
};

// Throws not_a_homomorphism / bad_parameters when the spec is inconsistent.
void validate_semidirect_spec(const SemidirectSpec& spec);

bool action_is_trivial(const SemidirectSpec& spec);
// {a2 : action[a2] = identity} as a subset of b2's carrier.
ElementSet action_kernel(const SemidirectSpec& spec);

// Product on pairs, (a1,a2) at index a2*|B1| + a1:
//   (a1,a2) + (b1,b2) = (a1+b1, a2+b2)
//   (a1,a2) o (b1,b2) = (a1 o action[a2](b1), a2 o b2)
// left_factor/right_factor are the canonical copies B1x{0} and {0}xB2.
struct SemidirectProduct {
  SkewBrace brace;
  ElementSet left_factor;
  ElementSet right_factor;
};
SemidirectProduct semidirect_product(
    const SemidirectSpec& spec, ValidationMode mode = ValidationMode::automatic);

// Checks tied to an ideal of a semidirect product: the image under the second
// projection is an ideal of B2; an ideal {0}xJ must come from an ideal J of
// B2 inside the action kernel; an ideal Jx{0} must come from an
// action-invariant ideal J of B1.
struct ProjectionReport {
  IdealHandle pi2;              // projection of the ideal into B2
  bool vertical = false;        // ideal is {0} x J
  bool vertical_ok = false;     // J is an ideal of B2 inside the kernel
  bool horizontal = false;      // ideal is J x {0}
  bool horizontal_ok = false;   // J is an action-invariant ideal of B1
};
ProjectionReport projection_checks(const SemidirectSpec& spec,
                                   const SemidirectProduct& product,
                                   const ElementSet& ideal);

// Maps preserving both operations, identity first, deterministic order.
// Throws bound_exceeded when the order exceeds limits.aut_max_order.
std::vector<BraceMap> brace_automorphisms(const SkewBrace& b,
                                          const SearchLimits& limits = {});

// i_g(h) = g^-1 o h o g; always preserves o, may or may not preserve +.
BraceMap inner_mult_automorphism(const SkewBrace& b, int g);

// Action sending the unique index-2 multiplicative subgroup of b2 to the
// identity and everything else to tau.  tau must preserve both operations of
// b1 and square to the identity.  tau = identity gives the trivial action.
SemidirectSpec build_sign_action(const SkewBrace& b1, const SkewBrace& b2,
                                 const BraceMap& tau);

// Bijection preserving both operations, or nullopt (definitive).  A cheap
// invariant comparison runs before the backtracking search.
std::optional<BraceMap> are_isomorphic(const SkewBrace& a, const SkewBrace& b);

// Every homomorphism from (B2, o) into the brace automorphism group of B1,
// as semidirect specs; the trivial action comes first; deduplicated.
std::vector<SemidirectSpec> enumerate_actions(const SkewBrace& b1,
                                              const SkewBrace& b2,
                                              const SearchLimits& limits = {});

}  // namespace skewbrace
