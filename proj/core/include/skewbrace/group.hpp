#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/element_set.hpp"
#include "skewbrace/errors.hpp"

namespace skewbrace {

// Finite group on the carrier {0, ..., order-1} with identity 0, stored as a
// full Cayley table.  Construction validates the table (Latin property,
// identity, associativity) and reports a witness triple on failure.
class FiniteGroup {
public:
  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows);
  // Accepts a table whose identity is any element; relabels so it becomes 0.
  static FiniteGroup from_table_any_identity(
      const std::vector<std::vector<int>>& rows);

  int order() const noexcept { return order_; }
  uint16_t op(int a, int b) const { return table_[a * order_ + b]; }
  uint16_t inv(int a) const { return inverse_[a]; }
  const std::vector<uint16_t>& table() const noexcept { return table_; }
  const uint16_t* row(int a) const { return table_.data() + a * order_; }

  int element_order(int a) const;
  std::vector<int> element_orders() const;
  int centralizer_size(int a) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

private:
  FiniteGroup(int order, std::vector<uint16_t> table);
  void build_inverse();

  int order_ = 0;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inverse_;
};

// Catalog constructors.  All produce identity 0.
FiniteGroup make_cyclic(int n);
FiniteGroup make_abelian(const std::vector<int>& factors);
FiniteGroup make_klein();
FiniteGroup make_dihedral(int n);    // order 2n, n >= 1
FiniteGroup make_dicyclic(int n);    // order 4n, n >= 1; n = 2 gives Q8
FiniteGroup make_quaternion();       // dicyclic(2)
FiniteGroup make_symmetric(int n);   // n <= 8
FiniteGroup make_alternating(int n); // n <= 8
FiniteGroup make_sl23();             // 2x2 matrices over F3 with det 1

// Pair (x1, x2) with x1 in g1 lives at index x2*|g1| + x1.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
int pair_index(int x1, int x2, int n1);
std::pair<int, int> unpair_index(int x, int n1);

// Internal-flavoured builders used to assemble the enumeration catalog.
// action[h] must be an automorphism of g1 and h -> action[h] a homomorphism.
FiniteGroup semidirect_group(const FiniteGroup& g1, const FiniteGroup& g2,
                             const std::vector<std::vector<uint16_t>>& action);
FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& normal_sub);
// Closure of permutation generators acting on {0..points-1}; the permutation
// group must act with a regular orbit nowhere required, elements are labeled
// in BFS discovery order with the identity first.
FiniteGroup group_from_permutations(int points,
                                    const std::vector<std::vector<int>>& gens);

// Subgroup machinery.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
// {j x j^-1 : x in s}
ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int j);
// union of conjugates over j in by
ElementSet conjugate_set_by_set(const FiniteGroup& g, const ElementSet& s,
                                const ElementSet& by);
// throws not_a_subgroup when h fails the subgroup check
bool is_normal(const FiniteGroup& g, const ElementSet& h);
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seed);
ElementSet center(const FiniteGroup& g);
ElementSet derived_subgroup(const FiniteGroup& g);
// Unique subgroup of index 2 (equivalently: squares and commutators generate
// an index-2 subgroup).  Throws no_index2_subgroup when none or several exist.
ElementSet unique_index2_subgroup(const FiniteGroup& g);

struct SearchLimits {
  int aut_max_order = 1000;          // group order bound for automorphism search
  long long holomorph_max_order = 2048;  // |G| * |Aut G| bound for holomorph()
};

// All automorphisms as mapping arrays, sorted lexicographically (so the
// identity map comes first).
std::vector<std::vector<uint16_t>> group_automorphisms(
    const FiniteGroup& g, const SearchLimits& limits = {});
std::optional<std::vector<uint16_t>> group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);

struct Holomorph {
  FiniteGroup group;
  // labels[i] = (g, a): the holomorph element with translation part g and
  // automorphism part automorphisms[a].
  std::vector<std::pair<uint16_t, uint16_t>> labels;
  std::vector<std::vector<uint16_t>> automorphisms;
};
Holomorph holomorph(const FiniteGroup& g, const SearchLimits& limits = {});

}  // namespace skewbrace
