#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// Every group of the given order for orders 1..16, 18, 20, 21, 22, 24 and
// any prime; for other orders only the abelian groups are listed and
// catalog_complete_for reports false.
std::vector<CatalogEntry> group_catalog(int order);
bool catalog_complete_for(int order);
// Abelian groups of the order (one per partition of each prime power).
std::vector<CatalogEntry> abelian_catalog(int order);
// Resolves tags like "cyclic:12", "abelian:2x2x3", "dihedral:4",
// "dicyclic:3", "symmetric:4", "alternating:4", "klein", "quaternion",
// "sl23", or a catalog name such as "S4".
std::optional<CatalogEntry> catalog_lookup(const std::string& tag, int order);

struct EnumerationLimits {
  long long holomorph_search_max = 400000;  // |A| * |Aut A| bound for the search
  SearchLimits search;
};

// Braces with additive group exactly this carrier: one per regular subgroup
// of order |A| inside the holomorph of A (no isomorphism reduction).
std::vector<SkewBrace> regular_subgroup_braces(
    const FiniteGroup& a, const EnumerationLimits& limits = {});

// One isomorphism class of braces.  orbit counts the regular subgroups of
// the additive group's holomorph giving this class, so summing orbit over
// classes with the same additive group recovers the raw count.
struct BraceClass {
  SkewBrace rep;
  std::string additive_name;
  long long orbit = 0;
};

struct EnumerationResult {
  int order = 0;
  std::string additive_filter;  // empty when the whole catalog was used
  bool complete = false;        // catalog covered every group of the order
  std::vector<BraceClass> classes;
  long long raw_count = 0;
  int count() const { return static_cast<int>(classes.size()); }
};

// Union over the group catalog (or one additive group selected by tag),
// deduplicated up to isomorphism with deterministic class order.
EnumerationResult enumerate_braces(int order,
                                   const std::optional<std::string>& additive_tag = {},
                                   const EnumerationLimits& limits = {});
EnumerationResult enumerate_with_additive(const CatalogEntry& additive,
                                          const EnumerationLimits& limits = {});

// Search over the three abelian groups of order 24 for a simple brace whose
// multiplicative group is symmetric of degree 4, together with the element b
// whose inner multiplicative automorphism preserves both operations.
struct SimpleS4Result {
  SkewBrace brace;
  std::string additive_name;
  int b = 0;                 // multiplicative involution with i_b a brace map
  int b_candidates = 0;      // how many such involutions were found
  int simple_s4_classes = 0; // how many classes passed the filter
};
SimpleS4Result find_simple_abelian_s4(const EnumerationLimits& limits = {});

// Isomorphism-invariant digest.  Byte layout (little-endian u32 words):
//   [order]
//   [k][ao_1 mo_1 n_1 ... ao_k mo_k n_k]   counts of (add order, mul order)
//   [lambda kernel size] [|B*B|]
//   [i][s_1 ... s_i]                        sorted ideal sizes
//   [m][t_1 ... t_m]                        sorted minimal ideal sizes
//   [|add center|] [|mul center|]
// digest() is the FNV-1a 64 hash of the bytes, in hex.
struct Fingerprint {
  uint32_t order = 0;
  std::vector<std::array<uint32_t, 3>> order_pairs;
  uint32_t lambda_kernel = 0;
  uint32_t star_size = 0;
  std::vector<uint32_t> ideal_sizes;
  std::vector<uint32_t> minimal_ideal_sizes;
  uint32_t add_center = 0;
  uint32_t mul_center = 0;

  std::vector<uint8_t> bytes() const;
  std::string digest() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const SkewBrace& b);

}  // namespace skewbrace
