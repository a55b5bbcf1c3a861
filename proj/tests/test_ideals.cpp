#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/ideals.hpp"

using namespace skewbrace;

namespace {

std::vector<ElementSet> sets_of(const std::vector<IdealHandle>& hs) {
  std::vector<ElementSet> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(h.set);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sizes_of(const std::vector<IdealHandle>& hs) {
  std::vector<int> out;
  for (const auto& h : hs) out.push_back(h.set.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewBrace> sample_braces() {
  std::vector<SkewBrace> bs;
  for (int n = 1; n <= 8; ++n)
    for (const auto& entry : group_catalog(n)) {
      bs.push_back(trivial_brace(entry.group));
      if (!entry.group.is_abelian())
        bs.push_back(opposite_mul_brace(entry.group));
    }
  bs.push_back(mod_p_squared_brace(2));
  bs.push_back(mod_p_squared_brace(3));
  return bs;
}

}  // namespace

TEST_CASE("ideals of trivial braces are the normal subgroups") {
  SkewBrace c6 = trivial_brace(make_cyclic(6));
  auto ideals = all_ideals(c6);
  CHECK(sizes_of(ideals) == std::vector<int>{1, 2, 3, 6});

  SkewBrace s3 = trivial_brace(make_symmetric(3));
  CHECK(sizes_of(all_ideals(s3)) == std::vector<int>{1, 3, 6});
}

TEST_CASE("a left ideal need not be an ideal") {
  SkewBrace s3 = trivial_brace(make_symmetric(3));
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.mul().element_order(x) == 2) {
      t = x;
      break;
    }
  ElementSet pair({0, static_cast<uint16_t>(t)}, 6);
  CHECK(is_left_ideal(s3, pair));
  CHECK_FALSE(is_ideal(s3, pair));

  CHECK_FALSE(is_left_ideal(s3, ElementSet({1, 2}, 6)));
}

TEST_CASE("ideals of the mod-4 brace") {
  SkewBrace b = mod_p_squared_brace(2);
  auto ideals = all_ideals(b);
  CHECK(sizes_of(ideals) == std::vector<int>{1, 2, 4});
  CHECK(ideals[1].set == ElementSet({0, 2}, 4));
  CHECK(ideals[1].ideal);
  CHECK(ideals[1].left_ideal);
  CHECK(ideals[1].minimal.has_value());
  CHECK(*ideals[1].minimal);
}

TEST_CASE("all_ideals agrees with the definition oracle") {
  for (const SkewBrace& b : sample_braces()) {
    auto got = sets_of(all_ideals(b));
    auto want = oracles::all_ideals_def(b);
    std::sort(want.begin(), want.end());
    CHECK_MESSAGE(got == want, "order ", b.order());
    for (const auto& s : want) {
      CHECK(is_ideal(b, s));
      CHECK(is_left_ideal(b, s));
    }
  }
}

TEST_CASE("all_ideals agrees with the oracle on every order-8 class") {
  for (const auto& c : enumerate_braces(8).classes) {
    auto got = sets_of(all_ideals(c.rep));
    auto want = oracles::all_ideals_def(c.rep);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("principal ideals are the smallest ideals through a point") {
  for (const SkewBrace& b : sample_braces()) {
    auto ideals = all_ideals(b);
    CHECK(principal_ideal(b, 0).set.is_zero());
    for (int x = 0; x < b.order(); ++x) {
      IdealHandle p = principal_ideal(b, x);
      CHECK(p.ideal);
      CHECK(p.set.contains(x));
      for (const auto& h : ideals)
        if (h.set.contains(x)) CHECK(p.set.subset_of(h.set));
    }
  }
}

TEST_CASE("minimal ideals and flags are consistent") {
  for (const SkewBrace& b : sample_braces()) {
    auto ideals = all_ideals(b);
    auto minimals = sets_of(minimal_ideals(b));
    std::vector<ElementSet> expected;
    for (const auto& h : ideals) {
      if (h.set.is_zero()) continue;
      bool minimal = true;
      for (const auto& other : ideals)
        if (!other.set.is_zero() && other.set != h.set &&
            other.set.subset_of(h.set))
          minimal = false;
      REQUIRE(h.minimal.has_value());
      CHECK(*h.minimal == minimal);
      if (minimal) expected.push_back(h.set);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(minimals == expected);
  }
}

TEST_CASE("ideal sum and intersection") {
  SkewBrace b = trivial_brace(make_cyclic(12));
  ElementSet two({0, 6}, 12);
  ElementSet three({0, 4, 8}, 12);
  ElementSet four({0, 3, 6, 9}, 12);

  IdealHandle sum = ideal_sum(b, two, three);
  CHECK(sum.set.size() == 6);
  CHECK(sum.ideal);

  IdealHandle meet = ideal_intersection(b, sum.set, four);
  CHECK(meet.set == two);
  CHECK(meet.ideal);

  CHECK(ideal_sum(b, three, four).set.is_whole());
  CHECK(ideal_intersection(b, two, three).set.is_zero());
}

TEST_CASE("quotient braces come with a projection homomorphism") {
  SkewBrace s3 = trivial_brace(make_symmetric(3));
  ElementSet rot;
  for (const auto& h : all_ideals(s3))
    if (h.set.size() == 3) rot = h.set;
  REQUIRE(rot.size() == 3);

  QuotientBrace q = quotient_brace(s3, rot);
  CHECK(q.brace.order() == 2);
  CHECK(q.projection.size() == 6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(q.projection[s3.add().op(x, y)] ==
            q.brace.add().op(q.projection[x], q.projection[y]));
      CHECK(q.projection[s3.mul().op(x, y)] ==
            q.brace.mul().op(q.projection[x], q.projection[y]));
    }

  SkewBrace m4 = mod_p_squared_brace(2);
  QuotientBrace half = quotient_brace(m4, ElementSet({0, 2}, 4));
  CHECK(half.brace.order() == 2);
  CHECK(half.brace.is_trivial());

  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.mul().element_order(x) == 2) {
      t = x;
      break;
    }
  try {
    quotient_brace(s3, ElementSet({0, static_cast<uint16_t>(t)}, 6));
    FAIL("expected not_an_ideal");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_an_ideal);
  }
}

TEST_CASE("simplicity across small orders") {
  CHECK_FALSE(is_simple(trivial_brace(make_cyclic(1))));
  CHECK(is_simple(trivial_brace(make_cyclic(5))));
  CHECK_FALSE(is_simple(mod_p_squared_brace(2)));
  CHECK_FALSE(is_simple(trivial_brace(make_symmetric(3))));

  const std::map<int, int> simple_classes = {{2, 1}, {3, 1},  {4, 0}, {5, 1},
                                             {6, 0}, {7, 1},  {8, 0}, {9, 0},
                                             {10, 0}, {11, 1}, {12, 2}};
  for (const auto& [order, expected] : simple_classes) {
    int found = 0;
    for (const auto& c : enumerate_braces(order).classes)
      if (is_simple(c.rep)) ++found;
    CHECK_MESSAGE(found == expected, "order ", order);
  }
}
