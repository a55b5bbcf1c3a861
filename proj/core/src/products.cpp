#include "skewbrace/products.hpp"

#include <algorithm>
#include <map>

#include "skewbrace/hom_search.hpp"

namespace skewbrace {

namespace {

bool is_identity_map(const std::vector<uint16_t>& m) {
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

IdealHandle handle_for(const SkewBrace& b, ElementSet s) {
  IdealHandle h{std::move(s), false, false, std::nullopt};
  h.left_ideal = is_left_ideal(b, h.set);
  h.ideal = h.left_ideal && is_ideal(b, h.set);
  return h;
}

void require_brace_automorphism(const SkewBrace& b1,
                                const std::vector<uint16_t>& m, int a2) {
  if (static_cast<int>(m.size()) != b1.order())
    throw error(errc::bad_parameters, "action row size mismatch");
  std::vector<char> hit(b1.order(), 0);
  for (uint16_t v : m) {
    if (v >= b1.order() || hit[v])
      throw error(errc::not_a_homomorphism,
                  "action row " + std::to_string(a2) + " is not a bijection");
    hit[v] = 1;
  }
  BraceMap bm = make_brace_map(b1, b1, m);
  if (!bm.preserves_add || !bm.preserves_mul)
    throw error(errc::not_a_homomorphism,
                "action row " + std::to_string(a2) +
                    " is not a brace automorphism");
}

}  // namespace

void validate_semidirect_spec(const SemidirectSpec& spec) {
  int n2 = spec.b2.order();
  if (static_cast<int>(spec.action.size()) != n2)
    throw error(errc::bad_parameters, "action size must match the acting brace");
  for (int a2 = 0; a2 < n2; ++a2)
    require_brace_automorphism(spec.b1, spec.action[a2], a2);
  if (!is_identity_map(spec.action[0]))
    throw error(errc::not_a_homomorphism, "action of 0 is not the identity");
  int n1 = spec.b1.order();
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      const auto& left = spec.action[spec.b2.mul().op(a, b)];
      const auto& fa = spec.action[a];
      const auto& fb = spec.action[b];
      for (int x = 0; x < n1; ++x)
        if (left[x] != fa[fb[x]])
          throw error(errc::not_a_homomorphism,
                      "action is not multiplicative at (" + std::to_string(a) +
                          ", " + std::to_string(b) + ")",
                      {a, b, x});
    }
}

bool action_is_trivial(const SemidirectSpec& spec) {
  for (const auto& row : spec.action)
    if (!is_identity_map(row)) return false;
  return true;
}

ElementSet action_kernel(const SemidirectSpec& spec) {
  std::vector<uint16_t> out;
  for (int a2 = 0; a2 < spec.b2.order(); ++a2)
    if (is_identity_map(spec.action[a2]))
      out.push_back(static_cast<uint16_t>(a2));
  return ElementSet(std::move(out), spec.b2.order());
}

SemidirectProduct semidirect_product(const SemidirectSpec& spec,
                                     ValidationMode mode) {
  validate_semidirect_spec(spec);
  int n1 = spec.b1.order(), n2 = spec.b2.order();
  long long n = static_cast<long long>(n1) * n2;
  if (n > 0xFFFF) throw error(errc::bad_parameters, "product order too large");
  int order = static_cast<int>(n);
  std::vector<std::vector<int>> add_rows(order, std::vector<int>(order));
  std::vector<std::vector<int>> mul_rows(order, std::vector<int>(order));
  for (int a2 = 0; a2 < n2; ++a2)
    for (int a1 = 0; a1 < n1; ++a1) {
      int a = pair_index(a1, a2, n1);
      const auto& act = spec.action[a2];
      for (int b2 = 0; b2 < n2; ++b2)
        for (int b1 = 0; b1 < n1; ++b1) {
          int b = pair_index(b1, b2, n1);
          add_rows[a][b] = pair_index(spec.b1.add().op(a1, b1),
                                      spec.b2.add().op(a2, b2), n1);
          mul_rows[a][b] = pair_index(spec.b1.mul().op(a1, act[b1]),
                                      spec.b2.mul().op(a2, b2), n1);
        }
    }
  SkewBrace brace = make_brace(FiniteGroup::from_table(add_rows),
                               FiniteGroup::from_table(mul_rows), mode);
  std::vector<uint16_t> left(n1), right(n2);
  for (int x = 0; x < n1; ++x) left[x] = static_cast<uint16_t>(x);
  for (int y = 0; y < n2; ++y)
    right[y] = static_cast<uint16_t>(pair_index(0, y, n1));
  return SemidirectProduct{std::move(brace), ElementSet(std::move(left), order),
                           ElementSet(std::move(right), order)};
}

ProjectionReport projection_checks(const SemidirectSpec& spec,
                                   const SemidirectProduct& product,
                                   const ElementSet& ideal) {
  int n1 = spec.b1.order();
  ProjectionReport rep;
  std::vector<char> m2(spec.b2.order(), 0);
  rep.vertical = true;
  rep.horizontal = true;
  std::vector<char> m1(n1, 0);
  for (uint16_t x : ideal.elements()) {
    int x1 = x % n1, x2 = x / n1;
    m2[x2] = 1;
    m1[x1] = 1;
    if (x1 != 0) rep.vertical = false;
    if (x2 != 0) rep.horizontal = false;
  }
  rep.pi2 = handle_for(spec.b2, ElementSet::from_mask(m2));
  if (rep.vertical) {
    ElementSet j = rep.pi2.set;
    rep.vertical_ok =
        is_ideal(spec.b2, j) && j.subset_of(action_kernel(spec));
  }
  if (rep.horizontal) {
    ElementSet j = ElementSet::from_mask(m1);
    bool invariant = true;
    auto mask = j.mask();
    for (const auto& row : spec.action)
      for (uint16_t v : j.elements())
        if (!mask[row[v]]) {
          invariant = false;
          break;
        }
    rep.horizontal_ok = is_ideal(spec.b1, j) && invariant;
  }
  (void)product;
  return rep;
}

std::vector<BraceMap> brace_automorphisms(const SkewBrace& b,
                                          const SearchLimits& limits) {
  if (b.order() > limits.aut_max_order)
    throw error(errc::bound_exceeded,
                "brace automorphism search bound exceeded");
  auto raw = find_homomorphisms({{&b.add(), &b.add()}, {&b.mul(), &b.mul()}},
                                {.injective = true});
  std::vector<BraceMap> out;
  out.reserve(raw.size());
  for (auto& m : raw) out.push_back(make_brace_map(b, b, std::move(m)));
  return out;
}

BraceMap inner_mult_automorphism(const SkewBrace& b, int g) {
  if (g < 0 || g >= b.order())
    throw error(errc::bad_parameters, "element out of range");
  std::vector<uint16_t> m(b.order());
  int gi = b.mul().inv(g);
  for (int h = 0; h < b.order(); ++h)
    m[h] = static_cast<uint16_t>(b.mul().op(b.mul().op(gi, h), g));
  return make_brace_map(b, b, std::move(m));
}

SemidirectSpec build_sign_action(const SkewBrace& b1, const SkewBrace& b2,
                                 const BraceMap& tau) {
  if (tau.size() != b1.order())
    throw error(errc::bad_parameters, "tau size mismatch");
  if (!tau.preserves_add || !tau.preserves_mul)
    throw error(errc::bad_parameters, "tau must preserve both operations");
  for (int x = 0; x < b1.order(); ++x)
    if (tau.mapping[tau.mapping[x]] != x)
      throw error(errc::bad_parameters, "tau must square to the identity");
  std::vector<uint16_t> id(b1.order());
  for (int x = 0; x < b1.order(); ++x) id[x] = static_cast<uint16_t>(x);
  std::vector<std::vector<uint16_t>> action(b2.order(), id);
  if (!is_identity_map(tau.mapping)) {
    ElementSet even = unique_index2_subgroup(b2.mul());
    auto mask = even.mask();
    for (int a2 = 0; a2 < b2.order(); ++a2)
      if (!mask[a2]) action[a2] = tau.mapping;
  }
  SemidirectSpec spec{b1, b2, std::move(action)};
  validate_semidirect_spec(spec);
  return spec;
}

std::optional<BraceMap> are_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto sorted_orders = [](const FiniteGroup& g) {
    auto v = g.element_orders();
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_orders(a.add()) != sorted_orders(b.add())) return std::nullopt;
  if (sorted_orders(a.mul()) != sorted_orders(b.mul())) return std::nullopt;
  auto found =
      find_homomorphisms({{&a.add(), &b.add()}, {&a.mul(), &b.mul()}},
                         {.injective = true, .max_results = 1});
  if (found.empty()) return std::nullopt;
  return make_brace_map(a, b, std::move(found.front()));
}

std::vector<SemidirectSpec> enumerate_actions(const SkewBrace& b1,
                                              const SkewBrace& b2,
                                              const SearchLimits& limits) {
  auto auts = brace_automorphisms(b1, limits);
  int m = static_cast<int>(auts.size());
  if (m > limits.aut_max_order)
    throw error(errc::bound_exceeded,
                "brace automorphism group too large for action enumeration");
  std::map<std::vector<uint16_t>, int> index;
  for (int i = 0; i < m; ++i) index[auts[i].mapping] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  std::vector<uint16_t> composed(b1.order());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < b1.order(); ++x)
        composed[x] = auts[i].mapping[auts[j].mapping[x]];
      rows[i][j] = index.at(composed);
    }
  FiniteGroup aut_group = FiniteGroup::from_table(rows);
  auto homs = find_homomorphisms({{&b2.mul(), &aut_group}}, {});
  std::vector<SemidirectSpec> out;
  out.reserve(homs.size());
  for (const auto& h : homs) {
    std::vector<std::vector<uint16_t>> action(b2.order());
    for (int a2 = 0; a2 < b2.order(); ++a2) action[a2] = auts[h[a2]].mapping;
    out.push_back(SemidirectSpec{b1, b2, std::move(action)});
  }
  return out;
}

}  // namespace skewbrace
