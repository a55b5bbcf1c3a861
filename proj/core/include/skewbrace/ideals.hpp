#pragma once

#include <optional>
#include <vector>

#include "skewbrace/brace.hpp"

namespace skewbrace {

// A verified ideal (or left ideal) of a specific brace.  Flags are computed
// by this module, never taken from input.
struct IdealHandle {
  ElementSet set;
  bool left_ideal = false;
  bool ideal = false;
  std::optional<bool> minimal;
};

// Additive subgroup with lambda_a(S) inside S for every a.  Returns false for
// sets that are not additive subgroups.
bool is_left_ideal(const SkewBrace& b, const ElementSet& s);
// Left ideal that is normal in both groups.
bool is_ideal(const SkewBrace& b, const ElementSet& s);

// Smallest ideal containing x: round-robin fixpoint of additive subgroup
// generation, additive conjugation, multiplicative conjugation, and all
// lambda maps.
IdealHandle principal_ideal(const SkewBrace& b, int x);

// Every ideal: the distinct principal ideals closed under pairwise sum.
// Sorted by (size, elements); minimal flags filled in.
std::vector<IdealHandle> all_ideals(const SkewBrace& b);
// Nonzero ideals containing no smaller nonzero ideal (these are always
// principal, so the sum closure is skipped).
std::vector<IdealHandle> minimal_ideals(const SkewBrace& b);

// Additive subgroup generated by the union; always an ideal again.
IdealHandle ideal_sum(const SkewBrace& b, const ElementSet& i,
                      const ElementSet& j);
IdealHandle ideal_intersection(const SkewBrace& b, const ElementSet& i,
                               const ElementSet& j);

// Quotient brace on coset representatives (minimum element of each additive
// coset; the coset of 0 is 0).  projection maps carrier to quotient index.
struct QuotientBrace {
  SkewBrace brace;
  std::vector<uint16_t> projection;
};
QuotientBrace quotient_brace(const SkewBrace& b, const ElementSet& ideal);

// Exactly the two trivial ideals {0} and B (so order 1 is not simple).
bool is_simple(const SkewBrace& b);

}  // namespace skewbrace
