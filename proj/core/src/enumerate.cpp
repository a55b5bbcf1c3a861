#include "skewbrace/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "skewbrace/ideals.hpp"
#include "skewbrace/products.hpp"

namespace skewbrace {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- abelian catalog -------------------------------------------------------

void partitions_of(int e, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(e - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Invariant factors (ascending, 1s dropped) from prime-power parts.
std::vector<int> invariant_factors(
    const std::vector<std::pair<int, std::vector<int>>>& parts_by_prime) {
  size_t rows = 0;
  for (const auto& [p, parts] : parts_by_prime)
    rows = std::max(rows, parts.size());
  std::vector<int> factors;
  for (size_t i = 0; i < rows; ++i) {
    int d = 1;
    for (const auto& [p, parts] : parts_by_prime)
      if (i < parts.size()) {
        int q = 1;
        for (int k = 0; k < parts[i]; ++k) q *= p;
        d *= q;
      }
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::string abelian_name(const std::vector<int>& invariants) {
  if (invariants.empty()) return "C1";
  std::ostringstream os;
  for (size_t i = 0; i < invariants.size(); ++i) {
    if (i) os << "x";
    os << "C" << invariants[i];
  }
  return os.str();
}

std::vector<CatalogEntry> abelian_entries(int order) {
  auto primes = factorize(order);
  // Partition choices per prime, parts descending.
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(e, e, cur, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<std::vector<int>> all_factors;
  std::vector<size_t> pick(primes.size(), 0);
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> parts_by_prime;
    for (size_t i = 0; i < primes.size(); ++i)
      parts_by_prime.emplace_back(primes[i].first, choices[i][pick[i]]);
    all_factors.push_back(invariant_factors(parts_by_prime));
    size_t i = 0;
    while (i < primes.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == primes.size()) break;
  }
  std::sort(all_factors.begin(), all_factors.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a > b;  // larger invariant factors first within a count
            });
  std::vector<CatalogEntry> out;
  for (const auto& f : all_factors)
    out.push_back({abelian_name(f), make_abelian(f)});
  return out;
}

// ---- non-abelian catalog ---------------------------------------------------

std::vector<std::vector<uint16_t>> two_step_action(int n1, int order2,
                                                   const std::vector<int>& flip,
                                                   const std::vector<uint16_t>& moved) {
  // flip[a2] == 0 gives the identity row, otherwise the "moved" row.
  std::vector<uint16_t> id(n1);
  for (int x = 0; x < n1; ++x) id[x] = static_cast<uint16_t>(x);
  std::vector<std::vector<uint16_t>> action(order2);
  for (int a2 = 0; a2 < order2; ++a2) action[a2] = flip[a2] ? moved : id;
  return action;
}

std::vector<uint16_t> inversion_row(int n) {
  std::vector<uint16_t> row(n);
  for (int x = 0; x < n; ++x) row[x] = static_cast<uint16_t>((n - x) % n);
  return row;
}

FiniteGroup make_c3_sd_c8() {
  std::vector<int> flip(8);
  for (int a2 = 0; a2 < 8; ++a2) flip[a2] = a2 % 2;
  return semidirect_group(make_cyclic(3), make_cyclic(8),
                          two_step_action(3, 8, flip, inversion_row(3)));
}

FiniteGroup make_c3_sd_d8() {
  // D8 acts through its quotient by the Klein subgroup {1, r^2, s, s r^2}.
  std::vector<int> flip(8);
  for (int a2 = 0; a2 < 8; ++a2) flip[a2] = a2 % 2;
  return semidirect_group(make_cyclic(3), make_dihedral(4),
                          two_step_action(3, 8, flip, inversion_row(3)));
}

FiniteGroup make_c4_sd_c4() {
  std::vector<int> flip{0, 1, 0, 1};
  return semidirect_group(make_cyclic(4), make_cyclic(4),
                          two_step_action(4, 4, flip, inversion_row(4)));
}

FiniteGroup make_klein_sd_c4() {
  std::vector<int> flip{0, 1, 0, 1};
  std::vector<uint16_t> swap{0, 2, 1, 3};
  return semidirect_group(make_klein(), make_cyclic(4),
                          two_step_action(4, 4, flip, swap));
}

FiniteGroup make_semidihedral16() {
  std::vector<uint16_t> row(8);
  for (int x = 0; x < 8; ++x) row[x] = static_cast<uint16_t>(3 * x % 8);
  return semidirect_group(make_cyclic(8), make_cyclic(2),
                          two_step_action(8, 2, {0, 1}, row));
}

FiniteGroup make_modular16() {
  std::vector<uint16_t> row(8);
  for (int x = 0; x < 8; ++x) row[x] = static_cast<uint16_t>(5 * x % 8);
  return semidirect_group(make_cyclic(8), make_cyclic(2),
                          two_step_action(8, 2, {0, 1}, row));
}

FiniteGroup make_central_product_d8_c4() {
  FiniteGroup big = direct_product(make_dihedral(4), make_cyclic(4));
  // Glue the central involutions r^2 and 2 together.
  ElementSet diag({0, static_cast<uint16_t>(pair_index(2, 2, 8))}, 32);
  return quotient_group(big, diag);
}

FiniteGroup make_gen_dihedral_c3c3() {
  FiniteGroup base = make_abelian({3, 3});
  std::vector<uint16_t> row(9);
  for (int x = 0; x < 9; ++x) {
    int x1 = x % 3, x2 = x / 3;
    row[x] = static_cast<uint16_t>((3 - x1) % 3 + 3 * ((3 - x2) % 3));
  }
  return semidirect_group(base, make_cyclic(2),
                          two_step_action(9, 2, {0, 1}, row));
}

FiniteGroup make_frobenius20() {
  // 2 generates the units mod 5.
  std::vector<std::vector<uint16_t>> action(4, std::vector<uint16_t>(5));
  int mult = 1;
  for (int a2 = 0; a2 < 4; ++a2) {
    for (int x = 0; x < 5; ++x)
      action[a2][x] = static_cast<uint16_t>(x * mult % 5);
    mult = mult * 2 % 5;
  }
  return semidirect_group(make_cyclic(5), make_cyclic(4), action);
}

FiniteGroup make_c7_sd_c3() {
  // 2 has order 3 mod 7.
  std::vector<std::vector<uint16_t>> action(3, std::vector<uint16_t>(7));
  int mult = 1;
  for (int a2 = 0; a2 < 3; ++a2) {
    for (int x = 0; x < 7; ++x)
      action[a2][x] = static_cast<uint16_t>(x * mult % 7);
    mult = mult * 2 % 7;
  }
  return semidirect_group(make_cyclic(7), make_cyclic(3), action);
}

std::vector<CatalogEntry> nonabelian_entries(int order) {
  switch (order) {
    case 6:
      return {{"S3", make_dihedral(3)}};
    case 8:
      return {{"D8", make_dihedral(4)}, {"Q8", make_quaternion()}};
    case 10:
      return {{"D10", make_dihedral(5)}};
    case 12:
      return {{"A4", make_alternating(4)},
              {"D12", make_dihedral(6)},
              {"Dic12", make_dicyclic(3)}};
    case 14:
      return {{"D14", make_dihedral(7)}};
    case 16:
      return {{"D16", make_dihedral(8)},
              {"SD16", make_semidihedral16()},
              {"M16", make_modular16()},
              {"Q16", make_dicyclic(4)},
              {"D8xC2", direct_product(make_dihedral(4), make_cyclic(2))},
              {"Q8xC2", direct_product(make_quaternion(), make_cyclic(2))},
              {"D8*C4", make_central_product_d8_c4()},
              {"C4:C4", make_c4_sd_c4()},
              {"(C2xC2):C4", make_klein_sd_c4()}};
    case 18:
      return {{"D18", make_dihedral(9)},
              {"S3xC3", direct_product(make_dihedral(3), make_cyclic(3))},
              {"(C3xC3):C2", make_gen_dihedral_c3c3()}};
    case 20:
      return {{"D20", make_dihedral(10)},
              {"Dic20", make_dicyclic(5)},
              {"C5:C4", make_frobenius20()}};
    case 21:
      return {{"C7:C3", make_c7_sd_c3()}};
    case 22:
      return {{"D22", make_dihedral(11)}};
    case 24:
      return {{"S4", make_symmetric(4)},
              {"A4xC2", direct_product(make_alternating(4), make_cyclic(2))},
              {"SL(2,3)", make_sl23()},
              {"D24", make_dihedral(12)},
              {"Dic24", make_dicyclic(6)},
              {"S3xC4", direct_product(make_dihedral(3), make_cyclic(4))},
              {"D12xC2", direct_product(make_dihedral(6), make_cyclic(2))},
              {"Dic12xC2", direct_product(make_dicyclic(3), make_cyclic(2))},
              {"D8xC3", direct_product(make_dihedral(4), make_cyclic(3))},
              {"Q8xC3", direct_product(make_quaternion(), make_cyclic(3))},
              {"C3:C8", make_c3_sd_c8()},
              {"C3:D8", make_c3_sd_d8()}};
    default:
      return {};
  }
}

}  // namespace

bool catalog_complete_for(int order) {
  return (order >= 1 && order <= 16) || order == 18 || order == 20 ||
         order == 21 || order == 22 || order == 24 || is_prime_int(order);
}

std::vector<CatalogEntry> abelian_catalog(int order) {
  if (order < 1) throw error(errc::bad_parameters, "order must be positive");
  return abelian_entries(order);
}

std::vector<CatalogEntry> group_catalog(int order) {
  auto out = abelian_catalog(order);
  auto extra = nonabelian_entries(order);
  for (auto& e : extra) out.push_back(std::move(e));
  return out;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& tag, int order) {
  auto wrap = [order](std::string name,
                      FiniteGroup g) -> std::optional<CatalogEntry> {
    if (g.order() != order) return std::nullopt;
    return CatalogEntry{std::move(name), std::move(g)};
  };
  auto colon = tag.find(':');
  if (colon != std::string::npos) {
    std::string kind = tag.substr(0, colon);
    std::string arg = tag.substr(colon + 1);
    try {
      if (kind == "cyclic") return wrap("C" + arg, make_cyclic(std::stoi(arg)));
      if (kind == "abelian") {
        std::vector<int> parts;
        std::istringstream is(arg);
        std::string piece;
        while (std::getline(is, piece, 'x')) parts.push_back(std::stoi(piece));
        FiniteGroup g = make_abelian(parts);
        std::vector<std::pair<int, std::vector<int>>> by_prime;
        int n = g.order();
        for (auto [p, e] : factorize(n)) {
          std::vector<int> exps;
          for (int part : parts) {
            int k = 0;
            while (part % p == 0) {
              part /= p;
              ++k;
            }
            if (k) exps.push_back(k);
          }
          std::sort(exps.rbegin(), exps.rend());
          by_prime.emplace_back(p, std::move(exps));
        }
        return wrap(abelian_name(invariant_factors(by_prime)), std::move(g));
      }
      if (kind == "dihedral") {
        int k = std::stoi(arg);
        return wrap("D" + std::to_string(2 * k), make_dihedral(k));
      }
      if (kind == "dicyclic") {
        int k = std::stoi(arg);
        return wrap(k == 2 ? "Q8" : (k == 4 ? "Q16" : "Dic" + std::to_string(4 * k)),
                    make_dicyclic(k));
      }
      if (kind == "symmetric")
        return wrap("S" + arg, make_symmetric(std::stoi(arg)));
      if (kind == "alternating")
        return wrap("A" + arg, make_alternating(std::stoi(arg)));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
    return std::nullopt;
  }
  if (tag == "klein") return wrap("C2xC2", make_klein());
  if (tag == "quaternion") return wrap("Q8", make_quaternion());
  if (tag == "sl23") return wrap("SL(2,3)", make_sl23());
  for (auto& e : group_catalog(order))
    if (e.name == tag) return e;
  return std::nullopt;
}

// ---- regular subgroup search ----------------------------------------------

namespace {

constexpr uint16_t kUnset = 0xFFFF;

struct VecHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    uint64_t h = 1469598103934665603ULL;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

// Search state and shared machinery for regular subgroups of the holomorph.
// A solution assigns to each carrier element a an automorphism lambda_a such
// that {(a, lambda_a)} is a subgroup; the group table is never materialized.
class RegularSearch {
 public:
  RegularSearch(const FiniteGroup& a, std::vector<std::vector<uint16_t>> auts,
                bool reduce_level1)
      : a_(a),
        n_(a.order()),
        auts_(std::move(auts)),
        m_(static_cast<int>(auts_.size())),
        reduce_level1_(reduce_level1) {
    for (int i = 0; i < m_; ++i) aut_index_.emplace(auts_[i], i);
    inv_.resize(m_);
    perm_order_.resize(m_);
    std::vector<uint16_t> invp(n_);
    for (int i = 0; i < m_; ++i) {
      for (int x = 0; x < n_; ++x) invp[auts_[i][x]] = static_cast<uint16_t>(x);
      inv_[i] = static_cast<uint16_t>(aut_index_.at(invp));
      perm_order_[i] = perm_order(auts_[i]);
    }
  }

  std::vector<std::vector<uint16_t>> run() {
    std::vector<uint16_t> cover(n_, kUnset);
    cover[0] = identity_index();
    search(cover, 0);
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

  int compose(int i, int j) {
    uint32_t key = static_cast<uint32_t>(i) << 16 | static_cast<uint32_t>(j);
    auto it = comp_memo_.find(key);
    if (it != comp_memo_.end()) return it->second;
    std::vector<uint16_t> c(n_);
    for (int x = 0; x < n_; ++x) c[x] = auts_[i][auts_[j][x]];
    int r = aut_index_.at(c);
    comp_memo_.emplace(key, r);
    return r;
  }

  int conjugate(int g, int f) { return compose(compose(g, f), inv_[g]); }

  // cover'[g(a)] = g lambda_a g^-1
  std::vector<uint16_t> conjugate_cover(const std::vector<uint16_t>& cover,
                                        int g) {
    std::vector<uint16_t> out(n_);
    for (int x = 0; x < n_; ++x)
      out[auts_[g][x]] = static_cast<uint16_t>(conjugate(g, cover[x]));
    return out;
  }

  // Small generating set (by greedy closure) of the given automorphism
  // indices, which must form a subgroup.
  std::vector<int> greedy_generators(const std::vector<int>& subgroup) {
    std::vector<int> gens;
    std::unordered_set<int> closed{identity_index()};
    std::vector<int> list{identity_index()};
    for (int e : subgroup) {
      if (closed.count(e)) continue;
      gens.push_back(e);
      for (size_t head = 0; head < list.size(); ++head)
        for (int g : gens)
          for (int p : {compose(list[head], g), compose(g, list[head])})
            if (closed.insert(p).second) list.push_back(p);
    }
    return gens;
  }

  std::vector<int> full_aut_generators() {
    std::vector<int> all(m_);
    std::iota(all.begin(), all.end(), 0);
    return greedy_generators(all);
  }

  int identity_index() const {
    // Automorphism lists are sorted, and the identity is lexicographically
    // minimal among permutations fixing 0.
    return 0;
  }

  const FiniteGroup& group() const { return a_; }
  const std::vector<std::vector<uint16_t>>& auts() const { return auts_; }
  int aut_count() const { return m_; }

 private:
  int perm_order(const std::vector<uint16_t>& p) const {
    std::vector<char> seen(n_, 0);
    long long l = 1;
    for (int i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = 1;
        ++len;
      }
      l = std::lcm(l, static_cast<long long>(len));
    }
    return static_cast<int>(l);
  }

  // Order of the holomorph element (x, f); must divide n for membership in a
  // regular subgroup.  Returns 0 when the order cannot divide n.
  int pair_order(int x, int f) const {
    int s = x;
    int z = auts_[f][x];
    int k = 1;
    int of = perm_order_[f];
    while (k <= n_) {
      if (s == 0 && k % of == 0) return n_ % k == 0 ? k : 0;
      s = a_.op(s, z);
      z = auts_[f][z];
      ++k;
    }
    return 0;
  }

  const std::vector<uint16_t>& candidates_for(int x) {
    auto it = candidate_cache_.find(x);
    if (it != candidate_cache_.end()) return it->second;
    std::vector<uint16_t> c;
    for (int f = 0; f < m_; ++f)
      if (pair_order(x, f) > 0) c.push_back(static_cast<uint16_t>(f));
    return candidate_cache_.emplace(x, std::move(c)).first->second;
  }

  // Orbit representatives of the level-1 candidates under conjugation by the
  // stabilizer of x in the automorphism group; conjugate choices lead to
  // isomorphic braces, and class completeness is preserved.
  std::vector<uint16_t> level1_candidates(int x) {
    std::vector<int> stab;
    for (int g = 0; g < m_; ++g)
      if (auts_[g][x] == x) stab.push_back(g);
    std::vector<int> gens = greedy_generators(stab);
    const auto& cands = candidates_for(x);
    std::unordered_set<int> cand_set(cands.begin(), cands.end());
    std::unordered_set<int> visited;
    std::vector<uint16_t> reps;
    for (uint16_t f : cands) {
      if (visited.count(f)) continue;
      reps.push_back(f);
      std::vector<int> queue{f};
      visited.insert(f);
      for (size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
          int c = conjugate(g, queue[head]);
          if (cand_set.count(c) && visited.insert(c).second) queue.push_back(c);
        }
    }
    return reps;
  }

  bool assign(std::vector<uint16_t>& cover, std::vector<uint16_t>& fresh,
              int x, int f) {
    if (cover[x] != kUnset) return cover[x] == f;
    cover[x] = static_cast<uint16_t>(f);
    fresh.push_back(static_cast<uint16_t>(x));
    return true;
  }

  // Close the partial assignment under the subgroup product
  // (x, l_x)(y, l_y) = (x + l_x(y), l_x l_y).
  bool propagate(std::vector<uint16_t>& cover, std::vector<uint16_t> queue) {
    std::vector<uint16_t> covered;
    for (int x = 0; x < n_; ++x)
      if (cover[x] != kUnset) covered.push_back(static_cast<uint16_t>(x));
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < covered.size(); ++i) {
        int y = covered[i];
        int zx = a_.op(x, auts_[cover[x]][y]);
        int fx = compose(cover[x], cover[y]);
        std::vector<uint16_t> fresh;
        if (!assign(cover, fresh, zx, fx)) return false;
        int zy = a_.op(y, auts_[cover[y]][x]);
        int fy = compose(cover[y], cover[x]);
        if (!assign(cover, fresh, zy, fy)) return false;
        for (uint16_t nw : fresh) {
          covered.push_back(nw);
          queue.push_back(nw);
        }
      }
    }
    return true;
  }

  void search(const std::vector<uint16_t>& cover, int depth) {
    int x = -1;
    for (int i = 1; i < n_; ++i)
      if (cover[i] == kUnset) {
        x = i;
        break;
      }
    if (x < 0) {
      solutions_.push_back(cover);
      return;
    }
    std::vector<uint16_t> cands = (depth == 0 && reduce_level1_)
                                      ? level1_candidates(x)
                                      : candidates_for(x);
    for (uint16_t f : cands) {
      std::vector<uint16_t> next = cover;
      next[x] = f;
      if (!propagate(next, {static_cast<uint16_t>(x)})) continue;
      search(next, depth + 1);
    }
  }

  const FiniteGroup& a_;
  int n_;
  std::vector<std::vector<uint16_t>> auts_;
  int m_;
  bool reduce_level1_;
  std::unordered_map<std::vector<uint16_t>, int, VecHash> aut_index_;
  std::vector<uint16_t> inv_;
  std::vector<int> perm_order_;
  std::unordered_map<uint32_t, int> comp_memo_;
  std::unordered_map<int, std::vector<uint16_t>> candidate_cache_;
  std::vector<std::vector<uint16_t>> solutions_;
};

std::vector<std::vector<uint16_t>> search_automorphisms(
    const FiniteGroup& a, const EnumerationLimits& limits) {
  auto auts = group_automorphisms(a, limits.search);
  long long total = static_cast<long long>(a.order()) * auts.size();
  if (total > limits.holomorph_search_max)
    throw error(errc::bound_exceeded,
                "holomorph search bound exceeded: " + std::to_string(total) +
                    " > " + std::to_string(limits.holomorph_search_max));
  return auts;
}

SkewBrace brace_from_cover(const FiniteGroup& a,
                           const std::vector<std::vector<uint16_t>>& auts,
                           const std::vector<uint16_t>& cover) {
  int n = a.order();
  std::vector<std::vector<int>> mul_rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto& lam = auts[cover[x]];
    for (int y = 0; y < n; ++y) mul_rows[x][y] = a.op(x, lam[y]);
  }
  return make_brace(a, FiniteGroup::from_table(mul_rows));
}

}  // namespace

std::vector<SkewBrace> regular_subgroup_braces(const FiniteGroup& a,
                                               const EnumerationLimits& limits) {
  auto auts = search_automorphisms(a, limits);
  RegularSearch search(a, std::move(auts), false);
  auto covers = search.run();
  std::vector<SkewBrace> out;
  out.reserve(covers.size());
  for (const auto& c : covers)
    out.push_back(brace_from_cover(a, search.auts(), c));
  return out;
}

EnumerationResult enumerate_with_additive(const CatalogEntry& additive,
                                          const EnumerationLimits& limits) {
  const FiniteGroup& a = additive.group;
  auto auts = search_automorphisms(a, limits);
  RegularSearch search(a, std::move(auts), true);
  auto found = search.run();
  auto gens = search.full_aut_generators();

  // Conjugation orbits classify braces on this additive group up to
  // isomorphism.  Each orbit is walked fully: its size is the number of
  // regular subgroups giving the class, and its lexicographically smallest
  // member is the canonical representative.
  std::unordered_map<std::vector<uint16_t>, int, VecHash> pending;
  for (size_t i = 0; i < found.size(); ++i) pending.emplace(found[i], 1);
  struct RawClass {
    std::vector<uint16_t> rep;
    long long orbit;
  };
  std::vector<RawClass> classes;
  for (const auto& cover : found) {
    auto it = pending.find(cover);
    if (it == pending.end() || it->second == 0) continue;
    std::unordered_set<std::vector<uint16_t>, VecHash> orbit{cover};
    std::vector<std::vector<uint16_t>> queue{cover};
    std::vector<uint16_t> best = cover;
    for (size_t head = 0; head < queue.size(); ++head)
      for (int g : gens) {
        auto c = search.conjugate_cover(queue[head], g);
        if (orbit.count(c)) continue;
        if (c < best) best = c;
        orbit.insert(c);
        queue.push_back(std::move(c));
      }
    for (const auto& member : orbit) {
      auto pit = pending.find(member);
      if (pit != pending.end()) pit->second = 0;
    }
    classes.push_back({std::move(best), static_cast<long long>(orbit.size())});
  }
  std::sort(classes.begin(), classes.end(),
            [](const RawClass& x, const RawClass& y) { return x.rep < y.rep; });

  EnumerationResult result;
  result.order = a.order();
  result.additive_filter = additive.name;
  result.complete = true;
  for (auto& rc : classes) {
    result.raw_count += rc.orbit;
    result.classes.push_back(BraceClass{
        brace_from_cover(a, search.auts(), rc.rep), additive.name, rc.orbit});
  }
  return result;
}

EnumerationResult enumerate_braces(int order,
                                   const std::optional<std::string>& additive_tag,
                                   const EnumerationLimits& limits) {
  if (order < 1) throw error(errc::bad_parameters, "order must be positive");
  if (additive_tag) {
    auto entry = catalog_lookup(*additive_tag, order);
    if (!entry)
      throw error(errc::unsupported_order,
                  "no catalog group of order " + std::to_string(order) +
                      " for tag " + *additive_tag);
    EnumerationResult r = enumerate_with_additive(*entry, limits);
    r.complete = catalog_complete_for(order);
    return r;
  }
  if (!catalog_complete_for(order))
    throw error(errc::unsupported_order,
                "group catalog is incomplete at order " + std::to_string(order));
  EnumerationResult result;
  result.order = order;
  result.complete = true;
  for (const auto& entry : group_catalog(order)) {
    EnumerationResult part = enumerate_with_additive(entry, limits);
    result.raw_count += part.raw_count;
    for (auto& c : part.classes) result.classes.push_back(std::move(c));
  }
  return result;
}

SimpleS4Result find_simple_abelian_s4(const EnumerationLimits& limits) {
  FiniteGroup s4 = make_symmetric(4);
  std::optional<SimpleS4Result> found;
  int total_classes = 0;
  for (const auto& entry : abelian_catalog(24)) {
    EnumerationResult r = enumerate_with_additive(entry, limits);
    for (auto& c : r.classes) {
      if (!group_isomorphism(c.rep.mul(), s4)) continue;
      if (!is_simple(c.rep)) continue;
      ++total_classes;
      if (found) continue;
      SimpleS4Result res{c.rep, entry.name, 0, 0, 0};
      for (int g = 1; g < res.brace.order(); ++g) {
        if (res.brace.mul().op(g, g) != 0) continue;
        BraceMap ig = inner_mult_automorphism(res.brace, g);
        if (ig.preserves_add && ig.preserves_mul) {
          if (res.b_candidates == 0) res.b = g;
          ++res.b_candidates;
        }
      }
      found = std::move(res);
    }
  }
  if (!found)
    throw error(errc::search_failed,
                "no simple brace of abelian type with symmetric multiplicative "
                "group at order 24");
  found->simple_s4_classes = total_classes;
  return *found;
}

std::vector<uint8_t> Fingerprint::bytes() const {
  std::vector<uint8_t> out;
  auto put = [&out](uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
  };
  put(order);
  put(static_cast<uint32_t>(order_pairs.size()));
  for (const auto& t : order_pairs) {
    put(t[0]);
    put(t[1]);
    put(t[2]);
  }
  put(lambda_kernel);
  put(star_size);
  put(static_cast<uint32_t>(ideal_sizes.size()));
  for (uint32_t s : ideal_sizes) put(s);
  put(static_cast<uint32_t>(minimal_ideal_sizes.size()));
  for (uint32_t s : minimal_ideal_sizes) put(s);
  put(add_center);
  put(mul_center);
  return out;
}

std::string Fingerprint::digest() const {
  uint64_t h = 1469598103934665603ULL;
  for (uint8_t b : bytes()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

Fingerprint fingerprint(const SkewBrace& b) {
  Fingerprint fp;
  fp.order = static_cast<uint32_t>(b.order());
  std::map<std::pair<int, int>, uint32_t> pairs;
  auto ao = b.add().element_orders();
  auto mo = b.mul().element_orders();
  for (int x = 0; x < b.order(); ++x) ++pairs[{ao[x], mo[x]}];
  for (const auto& [key, count] : pairs)
    fp.order_pairs.push_back({static_cast<uint32_t>(key.first),
                              static_cast<uint32_t>(key.second), count});
  uint32_t kernel = 0;
  for (int a = 0; a < b.order(); ++a) {
    bool id = true;
    const uint16_t* row = b.lambda_row(a);
    for (int x = 0; x < b.order() && id; ++x) id = row[x] == x;
    if (id) ++kernel;
  }
  fp.lambda_kernel = kernel;
  ElementSet whole = ElementSet::whole(b.order());
  fp.star_size = static_cast<uint32_t>(star_subgroup(b, whole, whole).size());
  for (const auto& h : all_ideals(b)) {
    fp.ideal_sizes.push_back(static_cast<uint32_t>(h.set.size()));
    if (h.minimal.value_or(false))
      fp.minimal_ideal_sizes.push_back(static_cast<uint32_t>(h.set.size()));
  }
  std::sort(fp.ideal_sizes.begin(), fp.ideal_sizes.end());
  std::sort(fp.minimal_ideal_sizes.begin(), fp.minimal_ideal_sizes.end());
  fp.add_center = static_cast<uint32_t>(center(b.add()).size());
  fp.mul_center = static_cast<uint32_t>(center(b.mul()).size());
  return fp;
}

}  // namespace skewbrace
