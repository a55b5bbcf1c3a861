#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything recomputes its predicate straight from the Cayley tables with
// the plainest possible loops, deliberately sharing no algorithmic code with
// the library.

#include <algorithm>
#include <set>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/element_set.hpp"
#include "skewbrace/group.hpp"

namespace oracles {

using skewbrace::ElementSet;
using skewbrace::FiniteGroup;
using skewbrace::SkewBrace;

inline ElementSet close_under_op(const FiniteGroup& g, std::vector<char> in) {
  in[0] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.order(); ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (!in[b]) continue;
        int c = g.op(a, b);
        if (!in[c]) {
          in[c] = 1;
          grew = true;
        }
      }
    }
  }
  return ElementSet::from_mask(in);
}

inline bool is_subgroup_def(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(0)) return false;
  for (int a : s.elements()) {
    bool inverse_inside = false;
    for (int b : s.elements()) {
      if (!s.contains(g.op(a, b))) return false;
      if (g.op(a, b) == 0) inverse_inside = true;
    }
    if (!inverse_inside) return false;
  }
  return true;
}

// Every subgroup, by closing each found subgroup extended by one element.
inline std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> found = {ElementSet::zero(g.order())};
  std::set<std::vector<uint16_t>> seen = {found[0].elements()};
  for (size_t head = 0; head < found.size(); ++head) {
    ElementSet base = found[head];
    for (int x = 1; x < g.order(); ++x) {
      if (base.contains(x)) continue;
      auto m = base.mask();
      m[x] = 1;
      ElementSet bigger = close_under_op(g, std::move(m));
      if (seen.insert(bigger.elements()).second) found.push_back(bigger);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline int lambda_of(const SkewBrace& b, int a, int x) {
  return b.add().op(b.add().inv(a), b.mul().op(a, x));
}

inline int star_of(const SkewBrace& b, int a, int x) {
  return b.add().op(lambda_of(b, a, x), b.add().inv(x));
}

inline bool is_ideal_def(const SkewBrace& b, const ElementSet& s) {
  if (!is_subgroup_def(b.add(), s)) return false;
  for (int a = 0; a < b.order(); ++a)
    for (int x : s.elements()) {
      if (!s.contains(lambda_of(b, a, x))) return false;
      if (!s.contains(b.add().op(b.add().op(a, x), b.add().inv(a)))) return false;
      if (!s.contains(b.mul().op(b.mul().op(a, x), b.mul().inv(a)))) return false;
    }
  return true;
}

inline std::vector<ElementSet> all_ideals_def(const SkewBrace& b) {
  std::vector<ElementSet> out;
  for (const auto& s : all_subgroups(b.add()))
    if (is_ideal_def(b, s)) out.push_back(s);
  return out;
}

// Additive span of {x * y : x in xs, y in ys}.
inline ElementSet star_span_def(const SkewBrace& b, const ElementSet& xs,
                                const ElementSet& ys) {
  std::vector<char> m(b.order(), 0);
  for (int x : xs.elements())
    for (int y : ys.elements()) m[star_of(b, x, y)] = 1;
  return close_under_op(b.add(), std::move(m));
}

// The order-1 brace has no nonzero ideals, so all four properties hold
// vacuously; the deciders below share that convention.
inline bool semiprime_def(const SkewBrace& b) {
  for (const auto& i : all_ideals_def(b)) {
    if (i.is_zero()) continue;
    if (star_span_def(b, i, i).is_zero()) return false;
  }
  return true;
}

inline bool prime_def(const SkewBrace& b) {
  auto ideals = all_ideals_def(b);
  for (const auto& i : ideals) {
    if (i.is_zero()) continue;
    for (const auto& j : ideals) {
      if (j.is_zero()) continue;
      if (star_span_def(b, i, j).is_zero()) return false;
    }
  }
  return true;
}

// Closes the seed sets under star spans in both orders; true when {0} is
// never produced.
inline bool star_words_avoid_zero(const SkewBrace& b,
                                  std::vector<ElementSet> seeds) {
  std::set<std::vector<uint16_t>> seen;
  for (const auto& s : seeds) seen.insert(s.elements());
  for (size_t head = 0; head < seeds.size(); ++head) {
    for (size_t other = 0; other <= head; ++other) {
      for (const ElementSet& p :
           {star_span_def(b, seeds[head], seeds[other]),
            star_span_def(b, seeds[other], seeds[head])}) {
        if (p.is_zero()) return false;
        if (seen.insert(p.elements()).second) seeds.push_back(p);
      }
    }
  }
  return true;
}

inline bool strongly_semiprime_def(const SkewBrace& b) {
  for (const auto& i : all_ideals_def(b)) {
    if (i.is_zero()) continue;
    if (!star_words_avoid_zero(b, {i})) return false;
  }
  return true;
}

inline bool strongly_prime_def(const SkewBrace& b) {
  std::vector<ElementSet> seeds;
  for (const auto& i : all_ideals_def(b))
    if (!i.is_zero()) seeds.push_back(i);
  return star_words_avoid_zero(b, std::move(seeds));
}

// Every group Cayley table on {0..n-1} with identity 0, by Latin-square
// backtracking plus a final associativity scan.  Only sane for n <= 5.
inline std::vector<std::vector<std::vector<int>>> all_group_tables(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<std::vector<std::vector<int>>> out;
  auto associative = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      if (associative()) out.push_back(t);
      return;
    }
    int r = cell / n, c = cell % n;
    if (t[r][c] != -1) {
      self(self, cell + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int i = 0; i < n && !used; ++i)
        used = t[r][i] == v || t[i][c] == v;
      if (used) continue;
      t[r][c] = v;
      self(self, cell + 1);
      t[r][c] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

inline bool brace_law_def(const FiniteGroup& add,
                          const std::vector<std::vector<int>>& mul) {
  int n = add.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = mul[a][add.op(b, c)];
        int rhs = add.op(add.op(mul[a][b], add.inv(a)), mul[a][c]);
        if (lhs != rhs) return false;
      }
  return true;
}

// Conjugates both tables along a permutation with perm[0] = 0.
inline SkewBrace relabel_brace(const SkewBrace& b, const std::vector<int>& perm) {
  int n = b.order();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  auto relabeled = [&](const FiniteGroup& g) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) rows[x][y] = perm[g.op(inv[x], inv[y])];
    return FiniteGroup::from_table(rows);
  };
  return make_brace(relabeled(b.add()), relabeled(b.mul()));
}

}  // namespace oracles
