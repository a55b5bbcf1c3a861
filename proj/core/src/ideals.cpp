#include "skewbrace/ideals.hpp"

#include <algorithm>

namespace skewbrace {

namespace {

// Fills in the flags by direct checks on the candidate set.
IdealHandle checked_handle(const SkewBrace& b, ElementSet s) {
  IdealHandle h{std::move(s), false, false, std::nullopt};
  h.left_ideal = is_left_ideal(b, h.set);
  h.ideal = h.left_ideal && is_ideal(b, h.set);
  return h;
}

void mark_minimal(std::vector<IdealHandle>& ideals) {
  for (auto& h : ideals) {
    if (h.set.is_zero()) {
      h.minimal = false;
      continue;
    }
    bool minimal = true;
    for (const auto& other : ideals) {
      if (other.set.is_zero() || other.set == h.set) continue;
      if (other.set.subset_of(h.set)) {
        minimal = false;
        break;
      }
    }
    h.minimal = minimal;
  }
}

}  // namespace

bool is_left_ideal(const SkewBrace& b, const ElementSet& s) {
  if (!is_subgroup(b.add(), s)) return false;
  auto m = s.mask();
  for (int a = 0; a < b.order(); ++a) {
    const uint16_t* row = b.lambda_row(a);
    for (uint16_t x : s.elements())
      if (!m[row[x]]) return false;
  }
  return true;
}

bool is_ideal(const SkewBrace& b, const ElementSet& s) {
  if (!is_left_ideal(b, s)) return false;
  // A left ideal is closed under the circle operation, so both normality
  // checks see genuine subgroups.
  return is_normal(b.add(), s) && is_normal(b.mul(), s);
}

IdealHandle principal_ideal(const SkewBrace& b, int x) {
  int n = b.order();
  std::vector<char> in(n, 0);
  std::vector<uint16_t> els;
  auto put = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      els.push_back(static_cast<uint16_t>(v));
    }
  };
  put(0);
  put(x);
  for (;;) {
    ElementSet closed = subgroup_closure(b.add(), ElementSet(els, n));
    in = closed.mask();
    els = closed.elements();
    size_t before = els.size();
    for (int a = 0; a < n; ++a) {
      int add_ai = b.add().inv(a);
      int mul_ai = b.mul().inv(a);
      const uint16_t* lam = b.lambda_row(a);
      for (size_t i = 0; i < before; ++i) {
        int v = els[i];
        put(b.add().op(b.add().op(a, v), add_ai));
        put(b.mul().op(b.mul().op(a, v), mul_ai));
        put(lam[v]);
      }
    }
    if (els.size() == before) break;
  }
  IdealHandle h = checked_handle(b, ElementSet(std::move(els), n));
  return h;
}

std::vector<IdealHandle> all_ideals(const SkewBrace& b) {
  int n = b.order();
  std::vector<ElementSet> sets;
  auto insert = [&](const ElementSet& s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
      sets.push_back(s);
      return true;
    }
    return false;
  };
  for (int x = 0; x < n; ++x) insert(principal_ideal(b, x).set);
  // Close under pairwise sums; a sum of ideals is an ideal.
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<uint16_t> u = sets[i].elements();
      u.insert(u.end(), sets[j].elements().begin(), sets[j].elements().end());
      insert(subgroup_closure(b.add(), ElementSet(std::move(u), n)));
    }
  std::sort(sets.begin(), sets.end());
  std::vector<IdealHandle> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(checked_handle(b, std::move(s)));
  mark_minimal(out);
  return out;
}

std::vector<IdealHandle> minimal_ideals(const SkewBrace& b) {
  int n = b.order();
  std::vector<ElementSet> sets;
  for (int x = 1; x < n; ++x) {
    ElementSet p = principal_ideal(b, x).set;
    if (std::find(sets.begin(), sets.end(), p) == sets.end())
      sets.push_back(std::move(p));
  }
  // Every nonzero ideal contains a nonzero principal ideal, so the minimal
  // ideals are the minimal elements here.
  std::vector<IdealHandle> out;
  for (const auto& s : sets) {
    bool minimal = true;
    for (const auto& other : sets)
      if (other != s && other.subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) {
      IdealHandle h = checked_handle(b, s);
      h.minimal = true;
      out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IdealHandle& a, const IdealHandle& b2) {
              return a.set < b2.set;
            });
  return out;
}

IdealHandle ideal_sum(const SkewBrace& b, const ElementSet& i,
                      const ElementSet& j) {
  std::vector<uint16_t> u = i.elements();
  u.insert(u.end(), j.elements().begin(), j.elements().end());
  ElementSet s = subgroup_closure(b.add(), ElementSet(std::move(u), b.order()));
  return checked_handle(b, std::move(s));
}

IdealHandle ideal_intersection(const SkewBrace& b, const ElementSet& i,
                               const ElementSet& j) {
  std::vector<uint16_t> out;
  std::set_intersection(i.elements().begin(), i.elements().end(),
                        j.elements().begin(), j.elements().end(),
                        std::back_inserter(out));
  return checked_handle(b, ElementSet(std::move(out), b.order()));
}

QuotientBrace quotient_brace(const SkewBrace& b, const ElementSet& ideal) {
  if (!is_ideal(b, ideal))
    throw error(errc::not_an_ideal, "quotient by a set that is not an ideal");
  int n = b.order();
  std::vector<uint16_t> proj(n, 0xFFFF);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (proj[x] != 0xFFFF) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (uint16_t h : ideal.elements())
      proj[b.add().op(x, h)] = static_cast<uint16_t>(id);
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> add_rows(q, std::vector<int>(q));
  std::vector<std::vector<int>> mul_rows(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      add_rows[i][j] = proj[b.add().op(reps[i], reps[j])];
      mul_rows[i][j] = proj[b.mul().op(reps[i], reps[j])];
    }
  return QuotientBrace{make_brace(FiniteGroup::from_table(add_rows),
                                  FiniteGroup::from_table(mul_rows)),
                       std::move(proj)};
}

bool is_simple(const SkewBrace& b) {
  if (b.order() == 1) return false;
  for (int x = 1; x < b.order(); ++x)
    if (!principal_ideal(b, x).set.is_whole()) return false;
  return true;
}

}  // namespace skewbrace
