#pragma once

#include <cstdint>
#include <vector>

#include "skewbrace/element_set.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

// How thoroughly make_brace checks the defining law a o (b+c) = a o b - a + a o c.
//   automatic: exhaustive up to order 512, sampled above.
//   exhaustive: always the full O(n^3) scan (the slow mode used for the big
//     semidirect products).
//   sampled: identity rows, bijectivity of every lambda map, and a seeded
//     random sample of law and action triples.
enum class ValidationMode { automatic, exhaustive, sampled };

// Skew left brace on {0..n-1}: two group structures sharing identity 0,
// related by the law above.  lambda(a, b) = -a + a o b is cached at
// construction; each lambda map is an automorphism of the additive group and
// a -> lambda_a is an action of the multiplicative group.
class SkewBrace {
public:
  int order() const noexcept { return order_; }
  const FiniteGroup& add() const noexcept { return add_; }
  const FiniteGroup& mul() const noexcept { return mul_; }

  uint16_t lambda(int a, int b) const { return lambda_[a * order_ + b]; }
  const uint16_t* lambda_row(int a) const { return lambda_.data() + a * order_; }
  // a * b = -a + a o b - b = lambda_a(b) - b
  uint16_t star(int a, int b) const {
    return add_.op(lambda(a, b), add_.inv(b));
  }

  bool is_trivial() const;  // the two tables coincide

  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;
  friend SkewBrace make_brace(FiniteGroup add, FiniteGroup mul,
                              ValidationMode mode);

private:
  SkewBrace(FiniteGroup add, FiniteGroup mul);

  int order_ = 0;
  FiniteGroup add_;
  FiniteGroup mul_;
  std::vector<uint16_t> lambda_;
};

// Throws error with a witness triple when the tables do not form a skew brace.
void validate_brace_tables(const FiniteGroup& add, const FiniteGroup& mul,
                           ValidationMode mode = ValidationMode::automatic);
SkewBrace make_brace(FiniteGroup add, FiniteGroup mul,
                     ValidationMode mode = ValidationMode::automatic);

SkewBrace trivial_brace(const FiniteGroup& g);
// (G, ., .^op); a valid brace for any G, equal to the trivial one iff abelian.
SkewBrace opposite_mul_brace(const FiniteGroup& g);
// Z/p^2 with a o b = a + b + p*a*b; p must be prime.
SkewBrace mod_p_squared_brace(int p);

// Total map between brace carriers with recomputed preservation flags.
struct BraceMap {
  std::vector<uint16_t> mapping;
  bool preserves_add = false;
  bool preserves_mul = false;

  uint16_t operator()(int x) const { return mapping[x]; }
  int size() const { return static_cast<int>(mapping.size()); }
  friend bool operator==(const BraceMap&, const BraceMap&) = default;
};

// Computes the flags against the given source/target braces; never trusts
// caller-supplied flags.
BraceMap make_brace_map(const SkewBrace& src, const SkewBrace& dst,
                        std::vector<uint16_t> mapping);
BraceMap lambda_map(const SkewBrace& b, int a);

// Additive subgroup generated by {x * y : x in xs, y in ys}.
ElementSet star_subgroup(const SkewBrace& b, const ElementSet& xs,
                         const ElementSet& ys);

// Restriction of both operations to a subset closed under both (relabeled
// along the sorted subset, so 0 stays 0).  Throws when not closed.
SkewBrace sub_brace(const SkewBrace& b, const ElementSet& s);

}  // namespace skewbrace
