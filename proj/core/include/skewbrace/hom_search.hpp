#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

// Backtracking search for structure-preserving maps between Cayley tables.
// A candidate map must satisfy f(s.op(a,b)) == d.op(f(a), f(b)) for every
// listed (source, target) table pair; passing both tables of a brace finds
// maps preserving both operations at once.
//
// The search branches on a greedy generating chain of the source (closure
// taken under all source tables), extends each partial assignment by table
// propagation, and prunes candidates by element order (and centralizer size
// when injectivity is required).

struct TablePair {
  const FiniteGroup* src;
  const FiniteGroup* dst;
};

struct HomSearchOptions {
  bool injective = false;
  // With injective set, candidate images must have equal element orders;
  // otherwise image orders must divide source orders.
  std::size_t max_results = static_cast<std::size_t>(-1);
};

// Returns mappings in a deterministic order (sorted lexicographically).
std::vector<std::vector<uint16_t>> find_homomorphisms(
    const std::vector<TablePair>& tables, const HomSearchOptions& options = {});

}  // namespace skewbrace
