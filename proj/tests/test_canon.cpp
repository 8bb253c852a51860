#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "helpers.hpp"
#include "sdsq/canon.hpp"
#include "sdsq/fixtures.hpp"
#include "sdsq/search.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;

TEST_CASE("row and column permutations preserve self-description") {
  const Square fig2 = fixtures::fig2();

  const Square rotated = permute_rows(fig2, test::perm({1, 2, 0}));
  CHECK(count_errors(rotated).total() == 0);

  CHECK(permute_rows(fig2, test::perm({0, 1, 2})) == fig2);
  CHECK(count_errors(permute_rows(fixtures::fig8a(), test::perm({1, 0}))).total() == 0);

  CHECK(count_errors(permute_cols(fig2, test::perm({2, 1, 0}))).total() == 0);
  CHECK(permute_cols(fig2, test::perm({0, 1, 2})) == fig2);
  CHECK(count_errors(permute_cols(fixtures::fig8b(), test::perm({1, 0}))).total() == 0);

  CHECK_THROWS_AS(permute_rows(fig2, test::perm({0, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(permute_rows(fig2, test::perm({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(permute_rows(fig2, test::perm({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("reflection is an involution that preserves self-description") {
  const Square fig2 = fixtures::fig2();
  CHECK(reflect(reflect(fig2)) == fig2);
  CHECK(count_errors(reflect(fig2)).total() == 0);
  CHECK(reflect(fixtures::fig4()) == fixtures::fig2());
}

TEST_CASE("standard normal form") {
  CHECK(to_snf(fixtures::fig2()) == fixtures::fig4());
  CHECK(to_snf(fixtures::fig3()) == fixtures::fig4());
  CHECK(to_snf(fixtures::fig4()) == fixtures::fig4());

  CHECK(in_standard_normal_form(fixtures::fig4()));
  CHECK(in_standard_normal_form(fixtures::fig8a()));
  CHECK(in_standard_normal_form(fixtures::fig8b()));
  // fig2 satisfies the two sort rules but fails the corner rule.
  CHECK_FALSE(in_standard_normal_form(fixtures::fig2()));

  CHECK(to_snf(Square{{1}}) == Square{{1}});
  CHECK_THROWS_AS(to_snf(fixtures::fig1()), std::invalid_argument);
}

TEST_CASE("snf is invariant across the whole transformation group") {
  Rng rng(3);
  for (const Square& base : {fixtures::fig2(), fixtures::fig8a(), fixtures::fig20()}) {
    const Square snf = to_snf(base);
    const std::size_t n = base.order();
    Square current = base;
    for (int step = 0; step < 40; ++step) {
      std::vector<std::size_t> perm(n - 1);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
      switch (rng.below(3)) {
        case 0: current = permute_rows(current, perm); break;
        case 1: current = permute_cols(current, perm); break;
        default: current = reflect(current); break;
      }
      CHECK(count_errors(current).total() == 0);
      CHECK(to_snf(current) == snf);
    }
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(fixtures::fig2(), fixtures::fig3()));
  CHECK_FALSE(equivalent(fixtures::fig8a(), fixtures::fig8b()));
  CHECK(equivalent(fixtures::fig2(), reflect(fixtures::fig2())));
  CHECK(snf_key(fixtures::fig3()) == snf_key(fixtures::fig2()));
}

TEST_CASE("anagrams") {
  CHECK(is_anagram(fixtures::fig2(), fixtures::fig3()));
  CHECK_FALSE(is_anagram(fixtures::fig8a(), fixtures::fig8b()));  // 5 vs no 5
  CHECK(is_anagram(fixtures::fig2(), fixtures::fig2()));
  CHECK_THROWS_AS(is_anagram(fixtures::fig2(), fixtures::fig8a()),
                  std::invalid_argument);
}

TEST_CASE("equivalent squares are anagrams; fig20's core shows the family tie") {
  CHECK(is_anagram(fixtures::fig3(), to_snf(fixtures::fig3())));
  // The core of fig20 reduces to fig8a: every 3x3 s-d square is one of two.
  CHECK(to_snf(core_of(fixtures::fig20())) == fixtures::fig8a());
}

TEST_CASE("equivalence class materialization") {
  const auto fig2_class = equivalence_class(fixtures::fig2());
  CHECK(fig2_class.size() == 72);
  std::size_t in_snf = 0;
  for (const Square& member : fig2_class) {
    CHECK(count_errors(member).total() == 0);
    CHECK(snf_key(member) == snf_key(fixtures::fig2()));
    in_snf += in_standard_normal_form(member);
  }
  CHECK(in_snf == 1);

  CHECK(equivalence_class(Square{{1}}).size() == 1);
  CHECK(equivalence_class(fixtures::fig8a()).size() == 8);

  CHECK_THROWS_AS(equivalence_class(fixtures::fig19()), std::invalid_argument);

  // Class size always divides the group order (n-1)!^2 * 2.
  const auto fig20_class = equivalence_class(fixtures::fig20());
  CHECK(1152 % fig20_class.size() == 0);
}
