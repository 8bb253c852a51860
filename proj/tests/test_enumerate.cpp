#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "sdsq/canon.hpp"
#include "sdsq/enumerate.hpp"
#include "sdsq/fixtures.hpp"
#include "sdsq/search.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;

namespace {

// Independent oracle for tiny orders: exhaustive loops and a hand-rolled
// condition check, sharing nothing with the pruned enumerator.
bool brute_sd_2x2(Entry a, Entry b, Entry c, Entry d) {
  const auto freq = [&](Entry v) {
    return (a == v) + (b == v) + (c == v) + (d == v);
  };
  return a + b == freq(b) && c + d == freq(d) && a + c == freq(c) &&
         b + d == freq(d);
}

std::vector<Square> brute_force_2x2(Entry max_abs) {
  std::vector<Square> found;
  for (Entry a = -max_abs; a <= max_abs; ++a)
    for (Entry b = -max_abs; b <= max_abs; ++b)
      for (Entry c = -max_abs; c <= max_abs; ++c)
        for (Entry d = -max_abs; d <= max_abs; ++d)
          if (brute_sd_2x2(a, b, c, d)) found.push_back(Square{{a, b}, {c, d}});
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

TEST_CASE("order 1 holds exactly the unit square") {
  const auto results = enumerate_all({.order = 1, .max_abs = 1});
  REQUIRE(results.size() == 1);
  CHECK(results[0] == Square{{1}});

  const auto wide = enumerate_all({.order = 1, .max_abs = 9});
  CHECK(wide == results);
}

TEST_CASE("order 2 has no nontrivial squares; the trivial census matches brute force") {
  CHECK(enumerate_all({.order = 2, .max_abs = 4}).empty());

  const auto trivia = enumerate_all(
      {.order = 2, .max_abs = 4, .dedupe = Dedupe::raw, .include_trivial = true});
  const auto brute = brute_force_2x2(4);
  CHECK(trivia.size() == 13);
  CHECK(trivia == brute);
  for (const Square& square : trivia) {
    CHECK(is_self_descriptive(square));
    CHECK_FALSE(is_nontrivial(square));
  }

  // All 13 are reflection-symmetric, so classes coincide with raw squares.
  const auto classes = enumerate_all({.order = 2,
                                      .max_abs = 4,
                                      .dedupe = Dedupe::up_to_equivalence,
                                      .include_trivial = true});
  CHECK(classes.size() == 13);
}

TEST_CASE("order 3 yields exactly the two known squares") {
  const auto classes =
      enumerate_all({.order = 3, .max_abs = 5, .dedupe = Dedupe::up_to_equivalence});
  REQUIRE(classes.size() == 2);
  CHECK(std::count(classes.begin(), classes.end(), fixtures::fig8a()) == 1);
  CHECK(std::count(classes.begin(), classes.end(), fixtures::fig8b()) == 1);
  for (const Square& square : classes) CHECK(in_standard_normal_form(square));

  const auto raw = enumerate_all({.order = 3, .max_abs = 5});
  CHECK(raw.size() == 16);  // two classes of 8
  for (const Square& square : raw) {
    CHECK(count_errors(square).total() == 0);
    const Square snf = to_snf(square);
    CHECK((snf == fixtures::fig8a() || snf == fixtures::fig8b()));
  }
}

TEST_CASE("the 3x3 corner sum bound") {
  const auto raw = enumerate_all({.order = 3, .max_abs = 5});
  CHECK(check_three_by_three_bound(raw));
  CHECK(check_three_by_three_bound(std::vector<Square>{fixtures::fig8a()}));
  CHECK(check_three_by_three_bound(std::vector<Square>{fixtures::fig8b()}));
  // No result carries corner sum 5; a square that did would flunk the check.
  for (const Square& square : raw) CHECK(row_sum(square, 2) != 5);
}

TEST_CASE("variant counts against the low-order expectations") {
  const auto ones = enumerate_all({.order = 1, .max_abs = 1});
  const VariantCounts one = count_by_variant(ones);
  CHECK(one.self_descriptive == 1);
  CHECK(one.magic == 1);
  CHECK(one.perfect == 1);
  CHECK(one.minimal == 0);
  CHECK(one.minimal_magic == 0);

  const auto twos = enumerate_all(
      {.order = 2, .max_abs = 4, .dedupe = Dedupe::raw, .include_trivial = true});
  const VariantCounts two = count_by_variant(twos);
  CHECK(two.self_descriptive == 0);
  CHECK(two.magic == 0);
  CHECK(two.minimal == 0);
  CHECK(two.perfect == 0);

  const auto threes = enumerate_all({.order = 3, .max_abs = 5});
  const VariantCounts three = count_by_variant(threes);
  CHECK(three.self_descriptive == 16);
  CHECK(three.magic == 0);
  CHECK(three.minimal == 0);
}

TEST_CASE("the solver never finds a square the enumerator missed") {
  const auto everything = enumerate_all({.order = 3, .max_abs = 5});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SearchConfig config;
    config.order = 3;
    config.max_abs = 5;
    config.rng_seed = seed;
    const SearchOutcome outcome = solve(config);
    REQUIRE(outcome.solution.has_value());
    CHECK(std::count(everything.begin(), everything.end(), *outcome.solution) == 1);
  }
}

TEST_CASE("guard refuses oversized orders unless raised") {
  EnumConfig config{.order = 5, .max_abs = 2};
  CHECK_THROWS_AS(enumerate_all(config), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({.order = 0, .max_abs = 2}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({.order = 2, .max_abs = 0}), std::invalid_argument);
}

TEST_CASE("order 4 smoke run at a small bound") {
  const auto raw = enumerate_all({.order = 4, .max_abs = 2});
  for (const Square& square : raw) CHECK(count_errors(square).total() == 0);
  const auto classes =
      enumerate_all({.order = 4, .max_abs = 2, .dedupe = Dedupe::up_to_equivalence});
  for (const Square& square : classes) CHECK(in_standard_normal_form(square));
  CHECK(classes.size() <= raw.size());
}
