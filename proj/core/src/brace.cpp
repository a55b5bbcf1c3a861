#include "skewbrace/brace.hpp"

#include <random>
#include <sstream>

namespace skewbrace {

namespace {

int exhaustive_cutoff() { return 512; }

uint64_t table_seed(const FiniteGroup& add, const FiniteGroup& mul) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint16_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (uint16_t v : add.table()) mix(v);
  for (uint16_t v : mul.table()) mix(v);
  return h;
}

void check_law_triple(const FiniteGroup& add, const FiniteGroup& mul, int a,
                      int b, int c) {
  int lhs = mul.op(a, add.op(b, c));
  int rhs = add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c));
  if (lhs != rhs) {
    std::ostringstream os;
    os << "law fails at (" << a << ", " << b << ", " << c << "): " << a
       << " o (" << b << " + " << c << ") = " << lhs << " but "
       << "the right side gives " << rhs;
    throw error(errc::brace_law, os.str(), {a, b, c});
  }
}

void check_action_triple(const FiniteGroup& add, const FiniteGroup& mul, int a,
                         int b, int c) {
  auto lam = [&](int x, int y) { return add.op(add.inv(x), mul.op(x, y)); };
  int lhs = lam(mul.op(a, b), c);
  int rhs = lam(a, lam(b, c));
  if (lhs != rhs) {
    std::ostringstream os;
    os << "lambda is not an action at (" << a << ", " << b << ", " << c << ")";
    throw error(errc::brace_law, os.str(), {a, b, c});
  }
}

}  // namespace

void validate_brace_tables(const FiniteGroup& add, const FiniteGroup& mul,
                           ValidationMode mode) {
  if (add.order() != mul.order())
    throw error(errc::bad_parameters, "additive and multiplicative orders differ");
  int n = add.order();
  bool full = mode == ValidationMode::exhaustive ||
              (mode == ValidationMode::automatic && n <= exhaustive_cutoff());
  if (full) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_law_triple(add, mul, a, b, c);
    return;
  }
  // Sampled: every a gets a batch of random (b, c) pairs, plus action triples
  // exercising lambda_{a o b} = lambda_a lambda_b.
  std::mt19937_64 rng(table_seed(add, mul));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < 48; ++k)
      check_law_triple(add, mul, a, pick(rng), pick(rng));
  for (int k = 0; k < 16 * n; ++k)
    check_action_triple(add, mul, pick(rng), pick(rng), pick(rng));
}

SkewBrace::SkewBrace(FiniteGroup add, FiniteGroup mul)
    : order_(add.order()), add_(std::move(add)), mul_(std::move(mul)) {
  lambda_.resize(static_cast<size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    int ai = add_.inv(a);
    for (int b = 0; b < order_; ++b)
      lambda_[a * order_ + b] =
          static_cast<uint16_t>(add_.op(ai, mul_.op(a, b)));
  }
}

bool SkewBrace::is_trivial() const { return add_.table() == mul_.table(); }

SkewBrace make_brace(FiniteGroup add, FiniteGroup mul, ValidationMode mode) {
  validate_brace_tables(add, mul, mode);
  return SkewBrace(std::move(add), std::move(mul));
}

SkewBrace trivial_brace(const FiniteGroup& g) {
  FiniteGroup copy = g;
  return make_brace(g, std::move(copy));
}

SkewBrace opposite_mul_brace(const FiniteGroup& g) {
  int n = g.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = g.op(b, a);
  return make_brace(g, FiniteGroup::from_table(rows));
}

SkewBrace mod_p_squared_brace(int p) {
  if (p < 2) throw error(errc::bad_parameters, "p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw error(errc::bad_parameters, "p must be prime");
  int n = p * p;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b + p * a * b) % n;
  return make_brace(make_cyclic(n), FiniteGroup::from_table(rows));
}

BraceMap make_brace_map(const SkewBrace& src, const SkewBrace& dst,
                        std::vector<uint16_t> mapping) {
  int n = src.order();
  if (static_cast<int>(mapping.size()) != n)
    throw error(errc::bad_parameters, "mapping size mismatch");
  for (uint16_t v : mapping)
    if (v >= dst.order())
      throw error(errc::bad_parameters, "mapping value out of range");
  BraceMap m{std::move(mapping), true, true};
  for (int a = 0; a < n && (m.preserves_add || m.preserves_mul); ++a)
    for (int b = 0; b < n && (m.preserves_add || m.preserves_mul); ++b) {
      if (m.preserves_add &&
          m.mapping[src.add().op(a, b)] !=
              dst.add().op(m.mapping[a], m.mapping[b]))
        m.preserves_add = false;
      if (m.preserves_mul &&
          m.mapping[src.mul().op(a, b)] !=
              dst.mul().op(m.mapping[a], m.mapping[b]))
        m.preserves_mul = false;
    }
  return m;
}

BraceMap lambda_map(const SkewBrace& b, int a) {
  std::vector<uint16_t> row(b.lambda_row(a), b.lambda_row(a) + b.order());
  return make_brace_map(b, b, std::move(row));
}

ElementSet star_subgroup(const SkewBrace& b, const ElementSet& xs,
                         const ElementSet& ys) {
  std::vector<char> m(b.order(), 0);
  for (uint16_t x : xs.elements())
    for (uint16_t y : ys.elements()) m[b.star(x, y)] = 1;
  return subgroup_closure(b.add(), ElementSet::from_mask(m));
}

SkewBrace sub_brace(const SkewBrace& b, const ElementSet& s) {
  if (!is_subgroup(b.add(), s) || !is_subgroup(b.mul(), s))
    throw error(errc::not_a_subgroup,
                "subset is not closed under both operations");
  const auto& els = s.elements();
  int k = s.size();
  std::vector<int> pos(b.order(), -1);
  for (int i = 0; i < k; ++i) pos[els[i]] = i;
  std::vector<std::vector<int>> add_rows(k, std::vector<int>(k));
  std::vector<std::vector<int>> mul_rows(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      add_rows[i][j] = pos[b.add().op(els[i], els[j])];
      mul_rows[i][j] = pos[b.mul().op(els[i], els[j])];
    }
  return make_brace(FiniteGroup::from_table(add_rows),
                    FiniteGroup::from_table(mul_rows));
}

}  // namespace skewbrace
