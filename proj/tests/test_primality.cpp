#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/primality.hpp"

using namespace skewbrace;

namespace {

const SkewBrace& simple_order12() {
  static SkewBrace b = [] {
    for (const auto& c : enumerate_braces(12).classes)
      if (is_simple(c.rep)) return c.rep;
    throw error(errc::search_failed, "no simple order-12 brace found");
  }();
  return b;
}

void check_failure_witness(const SkewBrace& b, const PropertyResult& r) {
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  REQUIRE_FALSE(r.witness->ideals.empty());
  for (const auto& i : r.witness->ideals) CHECK(is_ideal(b, i));
  REQUIRE_FALSE(r.witness->chain.empty());
  for (const auto& step : r.witness->chain)
    CHECK(star_subgroup(b, step.left, step.right) == step.result);
  CHECK(r.witness->chain.back().result.is_zero());
}

}  // namespace

TEST_CASE("trivial braces are never semiprime") {
  SkewBrace c2 = trivial_brace(make_cyclic(2));
  PropertyResult r = check_semiprime(c2);
  check_failure_witness(c2, r);
  CHECK(r.witness->ideals.front().is_whole());

  CHECK_FALSE(is_prime(c2));
  CHECK_FALSE(is_strongly_semiprime(c2));
  CHECK_FALSE(is_strongly_prime(c2));
}

TEST_CASE("the mod-4 brace fails through its minimal ideal") {
  SkewBrace b = mod_p_squared_brace(2);
  PropertyResult r = check_semiprime(b);
  check_failure_witness(b, r);
  CHECK(r.witness->ideals.front() == ElementSet({0, 2}, 4));
  CHECK(r.witness->chain.size() == 1);
}

TEST_CASE("the order-1 brace holds every property vacuously") {
  SkewBrace one = trivial_brace(make_cyclic(1));
  CHECK(is_semiprime(one));
  CHECK(is_prime(one));
  CHECK(is_strongly_semiprime(one));
  CHECK(is_strongly_prime(one));
  CHECK_FALSE(is_simple(one));
}

TEST_CASE("a simple nontrivial brace has all four properties") {
  const SkewBrace& b = simple_order12();
  CHECK_FALSE(b.is_trivial());
  CHECK(is_semiprime(b));
  CHECK(is_prime(b));
  CHECK(is_strongly_semiprime(b));
  CHECK(is_strongly_prime(b));

  PrimalityReport rep = primality_report(b);
  CHECK(rep.semiprime.holds);
  CHECK(rep.strongly_prime.holds);
  CHECK_FALSE(rep.semiprime.witness.has_value());
}

TEST_CASE("simple trivial braces are simple but not semiprime") {
  SkewBrace c5 = trivial_brace(make_cyclic(5));
  CHECK(is_simple(c5));
  CHECK_FALSE(is_semiprime(c5));
}

TEST_CASE("fast paths agree with oracles on every brace of order up to 12") {
  PrimalityOptions oracle;
  oracle.definition_oracle = true;
  for (int n = 1; n <= 12; ++n) {
    if (!catalog_complete_for(n)) continue;
    for (const auto& c : enumerate_braces(n).classes) {
      const SkewBrace& b = c.rep;
      PrimalityReport fast = primality_report(b);
      PrimalityReport defn = primality_report(b, oracle);
      CHECK(fast.semiprime.holds == defn.semiprime.holds);
      CHECK(fast.prime.holds == defn.prime.holds);
      CHECK(fast.strongly_semiprime.holds == defn.strongly_semiprime.holds);
      CHECK(fast.strongly_prime.holds == defn.strongly_prime.holds);

      CHECK(fast.semiprime.holds == oracles::semiprime_def(b));
      CHECK(fast.prime.holds == oracles::prime_def(b));
      CHECK(fast.strongly_semiprime.holds ==
            oracles::strongly_semiprime_def(b));
      CHECK(fast.strongly_prime.holds == oracles::strongly_prime_def(b));

      for (const PropertyResult* r :
           {&fast.semiprime, &fast.prime, &fast.strongly_semiprime,
            &fast.strongly_prime})
        if (!r->holds) check_failure_witness(b, *r);
    }
  }
}

TEST_CASE("report counters advance and never record a violation") {
  uint64_t before = primality_reports_produced();
  primality_report(mod_p_squared_brace(3));
  primality_report(trivial_brace(make_symmetric(3)));
  CHECK(primality_reports_produced() == before + 2);
  CHECK(primality_implication_violations() == 0);
}

TEST_CASE("closure caps are reported as such") {
  PrimalityOptions tiny;
  tiny.definition_oracle = true;
  tiny.closure_cap = 1;
  try {
    check_strongly_prime(mod_p_squared_brace(3), tiny);
    FAIL("expected cap_exceeded");
  } catch (const error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("the closure cap resolves options before environment") {
  PrimalityOptions o;
  CHECK(effective_closure_cap(o) == 10000);
  o.closure_cap = 7;
  CHECK(effective_closure_cap(o) == 7);
  o.closure_cap = 0;
  setenv("SKEWBRACE_CLOSURE_CAP", "123", 1);
  CHECK(effective_closure_cap(o) == 123);
  o.closure_cap = 9;
  CHECK(effective_closure_cap(o) == 9);
  unsetenv("SKEWBRACE_CLOSURE_CAP");
  o.closure_cap = 0;
  CHECK(effective_closure_cap(o) == 10000);
}

TEST_CASE("the unique-ideal criterion on small braces") {
  UniqueIdealCriterion none = unique_ideal_criterion(simple_order12());
  CHECK_FALSE(none.unique_nontrivial);
  CHECK_FALSE(none.applies);
  CHECK_FALSE(none.ideal.has_value());

  UniqueIdealCriterion m9 = unique_ideal_criterion(mod_p_squared_brace(3));
  CHECK(m9.unique_nontrivial);
  REQUIRE(m9.ideal.has_value());
  CHECK(m9.ideal->size() == 3);
  CHECK(m9.ideal_simple);
  CHECK_FALSE(m9.ideal_nontrivial_brace);
  CHECK_FALSE(m9.applies);
}

TEST_CASE("hypothesis checks for the product corollaries") {
  SkewBrace b1 = trivial_brace(make_cyclic(3));
  SkewBrace c2 = trivial_brace(make_cyclic(2));
  SemidirectSpec inversion{b1, c2, {{0, 1, 2}, {0, 2, 1}}};
  validate_semidirect_spec(inversion);

  CHECK_FALSE(corol1_check(inversion));
  CHECK(coro2_check(inversion));

  SemidirectProduct p = semidirect_product(inversion);
  UniqueIdealCriterion crit = unique_ideal_criterion(p.brace);
  CHECK(crit.unique_nontrivial);
  CHECK(*crit.ideal == p.left_factor);
  CHECK(crit.ideal_simple);
  // B1 is a trivial brace, so the criterion's nontriviality leg fails and no
  // strong primality conclusion is available; the product is not even
  // semiprime.
  CHECK_FALSE(crit.ideal_nontrivial_brace);
  CHECK_FALSE(crit.applies);
  CHECK_FALSE(is_semiprime(p.brace));
  CHECK_FALSE(is_strongly_prime(p.brace));

  SemidirectSpec trivial_action{b1, c2, {{0, 1, 2}, {0, 1, 2}}};
  try {
    corol1_check(trivial_action);
    FAIL("expected bad_parameters");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_parameters);
  }

  SkewBrace klein = trivial_brace(make_klein());
  SemidirectSpec nonsimple{klein, c2, {{0, 1, 2, 3}, {0, 2, 1, 3}}};
  try {
    coro2_check(nonsimple);
    FAIL("expected bad_parameters");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_parameters);
  }
}

TEST_CASE("strongly prime products from the order-12 simple brace") {
  const SkewBrace& b1 = simple_order12();
  SkewBrace c2 = trivial_brace(make_cyclic(2));
  auto specs = enumerate_actions(b1, c2);
  REQUIRE(specs.size() == 2);

  CHECK(coro2_check(specs[1]));
  CHECK_FALSE(corol1_check(specs[1]));

  SemidirectProduct p = semidirect_product(specs[1]);
  UniqueIdealCriterion crit = unique_ideal_criterion(p.brace);
  CHECK(crit.applies);
  CHECK(*crit.ideal == p.left_factor);
  CHECK(is_strongly_prime(p.brace));
  CHECK_FALSE(is_simple(p.brace));
}
