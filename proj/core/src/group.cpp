#include "skewbrace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "skewbrace/hom_search.hpp"

namespace skewbrace {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_table: return "invalid-table";
    case errc::identity_mismatch: return "identity-mismatch";
    case errc::brace_law: return "brace-law-violation";
    case errc::bad_parameters: return "bad-parameters";
    case errc::not_a_subgroup: return "not-a-subgroup";
    case errc::not_an_ideal: return "not-an-ideal";
    case errc::not_a_homomorphism: return "not-a-homomorphism";
    case errc::no_index2_subgroup: return "no-index2-subgroup";
    case errc::parse_error: return "parse-error";
    case errc::unsupported_order: return "unsupported-order";
    case errc::unknown_scenario: return "unknown-scenario";
    case errc::search_failed: return "search-failed";
    case errc::bound_exceeded: return "bound-exceeded";
    case errc::cap_exceeded: return "cap-exceeded";
  }
  return "unknown";
}

namespace {

std::string triple_msg(const char* what, int a, int b, int c) {
  std::ostringstream os;
  os << what << " at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Full group-table check with a named witness for the first failure found.
void validate_table(int n, const std::vector<uint16_t>& t) {
  if (n <= 0)
    throw error(errc::invalid_table, "empty table");
  // Latin property: distinct entries along every row and column.
  std::vector<int> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int b = 0; b < n; ++b) {
      int v = t[a * n + b];
      if (seen[v] >= 0)
        throw error(errc::invalid_table,
                    triple_msg("row repeats: a*b = a*c", a, seen[v], b),
                    {a, seen[v], b});
      seen[v] = b;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int a = 0; a < n; ++a) {
      int v = t[a * n + b];
      if (seen[v] >= 0)
        throw error(errc::invalid_table,
                    triple_msg("column repeats: a*c = b*c", seen[v], a, b),
                    {seen[v], a, b});
      seen[v] = a;
    }
  }
  for (int b = 0; b < n; ++b)
    if (t[b] != b)
      throw error(errc::invalid_table, triple_msg("0 is not a left identity",
                                                  0, b, t[b]),
                  {0, b, t[b]});
  for (int a = 0; a < n; ++a)
    if (t[a * n] != a)
      throw error(errc::invalid_table, triple_msg("0 is not a right identity",
                                                  a, 0, t[a * n]),
                  {a, 0, t[a * n]});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t[a * n + b];
      for (int c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + t[b * n + c]])
          throw error(errc::invalid_table,
                      triple_msg("associativity fails", a, b, c), {a, b, c});
    }
}

std::vector<uint16_t> flatten_checked(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n == 0 || n > 0xFFFF)
    throw error(errc::invalid_table, "table size out of range");
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw error(errc::invalid_table, "table is not square");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n)
        throw error(errc::invalid_table, triple_msg("entry out of range", a, b, v));
      t[a * n + b] = static_cast<uint16_t>(v);
    }
  }
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<uint16_t> table)
    : order_(order), table_(std::move(table)) {
  validate_table(order_, table_);
  build_inverse();
}

void FiniteGroup::build_inverse() {
  inverse_.assign(order_, 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (op(a, b) == 0) {
        inverse_[a] = static_cast<uint16_t>(b);
        break;
      }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows) {
  return FiniteGroup(static_cast<int>(rows.size()), flatten_checked(rows));
}

FiniteGroup FiniteGroup::from_table_any_identity(
    const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  auto t = flatten_checked(rows);
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = t[cand * n + b] == b && t[b * n + cand] == b;
    if (ok) e = cand;
  }
  if (e < 0)
    throw error(errc::invalid_table, "no identity element");
  if (e == 0) return FiniteGroup(n, std::move(t));
  // Swap labels 0 and e.
  auto p = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  std::vector<uint16_t> r(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      r[a * n + b] = static_cast<uint16_t>(p(t[p(a) * n + p(b)]));
  return FiniteGroup(n, std::move(r));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> out(order_);
  for (int a = 0; a < order_; ++a) out[a] = element_order(a);
  return out;
}

int FiniteGroup::centralizer_size(int a) const {
  int c = 0;
  for (int b = 0; b < order_; ++b)
    if (op(a, b) == op(b, a)) ++c;
  return c;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw error(errc::bad_parameters, "cyclic order must be positive");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return FiniteGroup::from_table(rows);
}

FiniteGroup make_abelian(const std::vector<int>& factors) {
  long long n = 1;
  for (int d : factors) {
    if (d < 1) throw error(errc::bad_parameters, "abelian factor must be positive");
    n *= d;
    if (n > 0xFFFF) throw error(errc::bad_parameters, "abelian order too large");
  }
  int order = static_cast<int>(n);
  int k = static_cast<int>(factors.size());
  // Mixed-radix encoding, first factor fastest.
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int x = a, y = b, v = 0, stride = 1;
      for (int i = 0; i < k; ++i) {
        int d = factors[i];
        v += ((x % d + y % d) % d) * stride;
        x /= d;
        y /= d;
        stride *= d;
      }
      rows[a][b] = v;
    }
  return FiniteGroup::from_table(rows);
}

FiniteGroup make_klein() { return make_abelian({2, 2}); }

FiniteGroup make_dihedral(int n) {
  if (n < 1) throw error(errc::bad_parameters, "dihedral parameter must be positive");
  int order = 2 * n;
  // 0..n-1 rotations r^k, n..2n-1 reflections s r^k; s r^j s = r^-j.
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool fa = a >= n, fb = b >= n;
      int ia = fa ? a - n : a, ib = fb ? b - n : b;
      int v;
      if (!fa && !fb) v = mod(ia + ib);
      else if (!fa) v = n + mod(ib - ia);        // r^i (s r^j) = s r^(j-i)
      else if (!fb) v = n + mod(ia + ib);        // (s r^i) r^j = s r^(i+j)
      else v = mod(ib - ia);                     // (s r^i)(s r^j) = r^(j-i)
      rows[a][b] = v;
    }
  return FiniteGroup::from_table(rows);
}

FiniteGroup make_dicyclic(int n) {
  if (n < 1) throw error(errc::bad_parameters, "dicyclic parameter must be positive");
  int order = 4 * n;
  int m = 2 * n;
  // 0..2n-1 powers a^i, 2n..4n-1 elements a^i b; b a^j = a^-j b, b^2 = a^n.
  auto mod = [m](int x) { return ((x % m) + m) % m; };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      bool fx = x >= m, fy = y >= m;
      int i = fx ? x - m : x, j = fy ? y - m : y;
      int v;
      if (!fx && !fy) v = mod(i + j);
      else if (!fx) v = m + mod(i + j);          // a^i (a^j b) = a^(i+j) b
      else if (!fy) v = m + mod(i - j);          // (a^i b) a^j = a^(i-j) b
      else v = mod(i - j + n);                   // (a^i b)(a^j b) = a^(i-j+n)
      rows[x][y] = v;
    }
  return FiniteGroup::from_table(rows);
}

FiniteGroup make_quaternion() { return make_dicyclic(2); }

namespace {

FiniteGroup group_from_perm_list(const std::vector<std::vector<int>>& perms) {
  int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  int pts = static_cast<int>(perms[0].size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<int> composed(pts);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < pts; ++x) composed[x] = perms[i][perms[j][x]];
      auto it = index.find(composed);
      if (it == index.end())
        throw error(errc::bad_parameters, "permutation set is not closed");
      rows[i][j] = it->second;
    }
  return FiniteGroup::from_table(rows);
}

bool perm_is_even(const std::vector<int>& p) {
  int swaps = 0;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 0;
}

}  // namespace

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 6)
    throw error(errc::bad_parameters, "symmetric degree must be 1..6");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_perm_list(perms);
}

FiniteGroup make_alternating(int n) {
  if (n < 1 || n > 7)
    throw error(errc::bad_parameters, "alternating degree must be 1..7");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (perm_is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perm_list(perms);
}

FiniteGroup make_sl23() {
  // Matrices ((a,b),(c,d)) over F3 with ad - bc = 1, identity first, the
  // rest in lexicographic order.
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  std::array<int, 4> id{1, 0, 0, 1};
  auto it = std::find(mats.begin(), mats.end(), id);
  std::iter_swap(mats.begin(), it);
  std::map<std::array<int, 4>, int> index;
  for (size_t i = 0; i < mats.size(); ++i) index[mats[i]] = static_cast<int>(i);
  int n = static_cast<int>(mats.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& x = mats[i];
      const auto& y = mats[j];
      std::array<int, 4> m{(x[0] * y[0] + x[1] * y[2]) % 3,
                           (x[0] * y[1] + x[1] * y[3]) % 3,
                           (x[2] * y[0] + x[3] * y[2]) % 3,
                           (x[2] * y[1] + x[3] * y[3]) % 3};
      rows[i][j] = index.at(m);
    }
  return FiniteGroup::from_table(rows);
}

int pair_index(int x1, int x2, int n1) { return x2 * n1 + x1; }
std::pair<int, int> unpair_index(int x, int n1) { return {x % n1, x / n1}; }

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  int n1 = g1.order(), n2 = g2.order();
  long long n = static_cast<long long>(n1) * n2;
  if (n > 0xFFFF) throw error(errc::bad_parameters, "product order too large");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a2 = 0; a2 < n2; ++a2)
    for (int a1 = 0; a1 < n1; ++a1)
      for (int b2 = 0; b2 < n2; ++b2)
        for (int b1 = 0; b1 < n1; ++b1)
          rows[pair_index(a1, a2, n1)][pair_index(b1, b2, n1)] =
              pair_index(g1.op(a1, b1), g2.op(a2, b2), n1);
  return FiniteGroup::from_table(rows);
}

FiniteGroup semidirect_group(const FiniteGroup& g1, const FiniteGroup& g2,
                             const std::vector<std::vector<uint16_t>>& action) {
  int n1 = g1.order(), n2 = g2.order();
  if (static_cast<int>(action.size()) != n2)
    throw error(errc::bad_parameters, "action size mismatch");
  long long n = static_cast<long long>(n1) * n2;
  if (n > 0xFFFF) throw error(errc::bad_parameters, "product order too large");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a2 = 0; a2 < n2; ++a2)
    for (int a1 = 0; a1 < n1; ++a1)
      for (int b2 = 0; b2 < n2; ++b2)
        for (int b1 = 0; b1 < n1; ++b1)
          rows[pair_index(a1, a2, n1)][pair_index(b1, b2, n1)] =
              pair_index(g1.op(a1, action[a2][b1]), g2.op(a2, b2), n1);
  return FiniteGroup::from_table(rows);
}

FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& normal_sub) {
  if (!is_normal(g, normal_sub))
    throw error(errc::bad_parameters, "quotient by a non-normal subgroup");
  int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // x is minimal in its coset: smaller members seen first
    for (uint16_t h : normal_sub.elements()) coset[g.op(x, h)] = id;
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) rows[i][j] = coset[g.op(reps[i], reps[j])];
  return FiniteGroup::from_table(rows);
}

FiniteGroup group_from_permutations(int points,
                                    const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> els{id};
  index[id] = 0;
  std::vector<int> composed(points);
  for (size_t head = 0; head < els.size(); ++head) {
    for (const auto& gen : gens) {
      for (int x = 0; x < points; ++x) composed[x] = els[head][gen[x]];
      if (!index.count(composed)) {
        if (els.size() >= 0xFFFF)
          throw error(errc::bad_parameters, "permutation closure too large");
        index[composed] = static_cast<int>(els.size());
        els.push_back(composed);
      }
    }
  }
  return group_from_perm_list(els);
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<uint16_t> els{0};
  in[0] = 1;
  for (uint16_t x : seed.elements())
    if (!in[x]) {
      in[x] = 1;
      els.push_back(x);
    }
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j) {
      int p = g.op(els[i], els[j]);
      if (!in[p]) {
        in[p] = 1;
        els.push_back(static_cast<uint16_t>(p));
      }
      if (i < j) {
        p = g.op(els[j], els[i]);
        if (!in[p]) {
          in[p] = 1;
          els.push_back(static_cast<uint16_t>(p));
        }
      }
    }
  return ElementSet(std::move(els), n);
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.ambient() != g.order() || !s.contains(0)) return false;
  auto m = s.mask();
  for (uint16_t a : s.elements())
    for (uint16_t b : s.elements())
      if (!m[g.op(a, b)]) return false;
  return true;
}

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& s, int j) {
  std::vector<uint16_t> out;
  out.reserve(s.elements().size());
  int ji = g.inv(j);
  for (uint16_t x : s.elements())
    out.push_back(g.op(g.op(j, x), ji));
  return ElementSet(std::move(out), g.order());
}

ElementSet conjugate_set_by_set(const FiniteGroup& g, const ElementSet& s,
                                const ElementSet& by) {
  std::vector<char> m(g.order(), 0);
  for (uint16_t j : by.elements()) {
    int ji = g.inv(j);
    for (uint16_t x : s.elements()) m[g.op(g.op(j, x), ji)] = 1;
  }
  return ElementSet::from_mask(m);
}

bool is_normal(const FiniteGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h))
    throw error(errc::not_a_subgroup, "normality check on a non-subgroup");
  auto m = h.mask();
  for (int j = 0; j < g.order(); ++j) {
    int ji = g.inv(j);
    for (uint16_t x : h.elements())
      if (!m[g.op(g.op(j, x), ji)]) return false;
  }
  return true;
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet cur = subgroup_closure(g, seed);
  for (;;) {
    ElementSet conj = conjugate_set_by_set(g, cur, ElementSet::whole(g.order()));
    if (conj.subset_of(cur)) return cur;
    std::vector<uint16_t> u = cur.elements();
    u.insert(u.end(), conj.elements().begin(), conj.elements().end());
    cur = subgroup_closure(g, ElementSet(std::move(u), g.order()));
  }
}

ElementSet center(const FiniteGroup& g) {
  std::vector<uint16_t> out;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int a = 0; a < g.order() && central; ++a)
      central = g.op(z, a) == g.op(a, z);
    if (central) out.push_back(static_cast<uint16_t>(z));
  }
  return ElementSet(std::move(out), g.order());
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  int n = g.order();
  std::vector<char> m(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m[g.op(g.op(a, b), g.op(g.inv(a), g.inv(b)))] = 1;
  return subgroup_closure(g, ElementSet::from_mask(m));
}

ElementSet unique_index2_subgroup(const FiniteGroup& g) {
  // Any index-2 subgroup contains all squares and commutators, so their
  // closure has index 2 exactly when the index-2 subgroup exists uniquely.
  int n = g.order();
  std::vector<char> m(n, 0);
  for (int a = 0; a < n; ++a) {
    m[g.op(a, a)] = 1;
    for (int b = 0; b < n; ++b)
      m[g.op(g.op(a, b), g.op(g.inv(a), g.inv(b)))] = 1;
  }
  ElementSet s = subgroup_closure(g, ElementSet::from_mask(m));
  int index = n / s.size();
  if (index == 2) return s;
  if (index == 1)
    throw error(errc::no_index2_subgroup, "group has no subgroup of index 2");
  throw error(errc::no_index2_subgroup,
              "group has several subgroups of index 2");
}

std::vector<std::vector<uint16_t>> group_automorphisms(
    const FiniteGroup& g, const SearchLimits& limits) {
  if (g.order() > limits.aut_max_order)
    throw error(errc::bound_exceeded,
                "automorphism search bound exceeded: order " +
                    std::to_string(g.order()) + " > " +
                    std::to_string(limits.aut_max_order));
  return find_homomorphisms({{&g, &g}}, {.injective = true});
}

std::optional<std::vector<uint16_t>> group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto oa = a.element_orders();
  auto ob = b.element_orders();
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;
  auto found = find_homomorphisms({{&a, &b}}, {.injective = true, .max_results = 1});
  if (found.empty()) return std::nullopt;
  return found.front();
}

Holomorph holomorph(const FiniteGroup& g, const SearchLimits& limits) {
  auto auts = group_automorphisms(g, limits);
  int n = g.order();
  int m = static_cast<int>(auts.size());
  long long total = static_cast<long long>(n) * m;
  if (total > limits.holomorph_max_order)
    throw error(errc::bound_exceeded,
                "holomorph bound exceeded: " + std::to_string(total) + " > " +
                    std::to_string(limits.holomorph_max_order));
  std::map<std::vector<uint16_t>, int> aut_index;
  for (int i = 0; i < m; ++i) aut_index[auts[i]] = i;
  int order = static_cast<int>(total);
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  std::vector<std::pair<uint16_t, uint16_t>> labels(order);
  // (g, f) at index a*n + g, matching pair_index over (translation, aut).
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < n; ++x)
      labels[pair_index(x, a, n)] = {static_cast<uint16_t>(x),
                                     static_cast<uint16_t>(a)};
  std::vector<uint16_t> composed(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) composed[x] = auts[a][auts[b][x]];
      int ab = aut_index.at(composed);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          rows[pair_index(x, a, n)][pair_index(y, b, n)] =
              pair_index(g.op(x, auts[a][y]), ab, n);
    }
  return Holomorph{FiniteGroup::from_table(rows), std::move(labels),
                   std::move(auts)};
}

}  // namespace skewbrace
