#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "sdsq/fixtures.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;

TEST_CASE("count_errors on the reference squares") {
  CHECK(count_errors(fixtures::fig2()).total() == 0);
  CHECK(count_errors(fixtures::fig8b()).total() == 0);

  const ErrorReport fig1 = count_errors(fixtures::fig1());
  CHECK(fig1.row_errors == 0);
  CHECK(fig1.col_errors == 0);
  CHECK(fig1.border_duplication_errors == 1);  // -4 appears twice
  CHECK(fig1.interior_coverage_errors == 3);   // three interior 1s, none in border
  CHECK(fig1.total() > 0);
}

TEST_CASE("self-descriptive checks conditions 3 and 4 only") {
  CHECK(is_self_descriptive(fixtures::fig1()));
  CHECK(is_self_descriptive(fixtures::fig4()));

  Square edited = fixtures::fig2();
  edited(0, 0) = 2;
  CHECK_FALSE(is_self_descriptive(edited));
}

TEST_CASE("nontrivial requires a complete, duplicate-free border") {
  CHECK_FALSE(is_nontrivial(fixtures::fig1()));
  CHECK(is_nontrivial(fixtures::fig2()));
  CHECK(is_nontrivial(Square{{1}}));
}

TEST_CASE("error report bounds on random squares") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(6));
    const Square square = test::random_square(n, 4, rng);
    const ErrorReport report = count_errors(square);
    CHECK(report.border_duplication_errors >= 0);
    CHECK(report.border_duplication_errors <= 2 * n - 2);
    CHECK(report.interior_coverage_errors >= 0);
    CHECK(report.interior_coverage_errors <= (n - 1) * (n - 1));
    CHECK(report.row_errors <= n);
    CHECK(report.col_errors <= n);
    CHECK((report.total() == 0) == is_nontrivial(square));
  }
}

TEST_CASE("magic diagonals match an endpoint frequency") {
  const MagicReport fig19 = is_magic(fixtures::fig19());
  CHECK(fig19.applicable);
  CHECK(fig19.magic);
  CHECK(fig19.main_diagonal_sum == 2);
  CHECK(fig19.co_diagonal_sum == 1);
  CHECK(fig19.main_matches_bottom_right);  // freq(4) = 2
  CHECK(fig19.co_matches_bottom_left);     // freq(5) = 1
  CHECK(fig19.main_matches_top_left);      // freq(-5) = 2 matches too
  CHECK(fig19.co_matches_top_right);       // freq(-3) = 1

  const MagicReport fig2 = is_magic(fixtures::fig2());
  CHECK(fig2.applicable);
  CHECK_FALSE(fig2.magic);
  CHECK(fig2.main_diagonal_sum == -4);

  const MagicReport unit = is_magic(Square{{1}});
  CHECK(unit.applicable);
  CHECK(unit.magic);

  CHECK_FALSE(is_magic(fixtures::fig1()).applicable);  // trivial input
}

TEST_CASE("bi-directional tuples") {
  // fig8a row 0 is bi-directional (first and last entries identical), but
  // column 1 is not, so the square as a whole is not.
  const Square fig8a = fixtures::fig8a();
  const FrequencyTable freq = frequencies(fig8a);
  CHECK(freq.at(fig8a(0, 0)) == row_sum(fig8a, 0));
  CHECK(fig8a(0, 0) == fig8a(0, 2));

  CHECK_FALSE(is_bidirectional(fixtures::fig2()).rows);
  CHECK(is_bidirectional(Square{{1}}).rows);
  CHECK(is_bidirectional(Square{{1}}).cols);
}

TEST_CASE("perfect squares") {
  CHECK(is_perfect(Square{{1}}));
  CHECK_FALSE(is_perfect(fixtures::fig19()));  // row 0: freq(-5)=2 != sum 1
  CHECK_FALSE(is_perfect(fixtures::fig2()));   // not even magic
}

TEST_CASE("minimal squares hold exactly the run 1-n .. n-1") {
  CHECK(is_minimal(fixtures::fig19()));
  CHECK_FALSE(is_minimal(fixtures::fig2()));
  CHECK_FALSE(is_minimal(Square{{1}}));  // required set is {0}
}

TEST_CASE("concentric cores") {
  CHECK(is_concentric(fixtures::fig20()));
  CHECK(core_of(fixtures::fig20()) ==
        Square{{0, 2, 0}, {-2, -2, 5}, {3, 2, -2}});

  CHECK_FALSE(is_concentric(fixtures::fig2()));
  CHECK_FALSE(is_concentric(fixtures::fig19()));
  CHECK_FALSE(concentric_report(Square{{1}}).applicable);

  const ConcentricReport fig20 = concentric_report(fixtures::fig20());
  CHECK(fig20.applicable);
  CHECK(fig20.core_self_descriptive);
  CHECK(fig20.core_nontrivial);
}

TEST_CASE("minimal corner theorem") {
  CHECK(check_minimal_corner_theorem(fixtures::fig19()));  // k=4, freq(4)=2
  CHECK_THROWS_AS(check_minimal_corner_theorem(fixtures::fig2()),
                  std::invalid_argument);
}

TEST_CASE("nontrivial squares expose exactly 2n-1 distinct values and even parity") {
  for (const Square& square :
       {fixtures::fig2(), fixtures::fig3(), fixtures::fig4(), fixtures::fig8a(),
        fixtures::fig8b(), fixtures::fig14l(), fixtures::fig19(),
        fixtures::fig20(), Square{{1}}}) {
    const std::size_t n = square.order();
    CHECK(frequencies(square).size() == 2 * n - 1);

    const Entry bottom = row_sum(square, n - 1);
    CHECK(bottom == col_sum(square, n - 1));
    CHECK((bottom - static_cast<Entry>(n)) % 2 == 0);
  }
}

TEST_CASE("classify aggregates all flags") {
  const VariantFlags fig19 = classify(fixtures::fig19());
  CHECK(fig19.nontrivial);
  CHECK(fig19.minimal);
  CHECK(fig19.magic.magic);
  CHECK_FALSE(fig19.perfect);

  const VariantFlags fig4 = classify(fixtures::fig4());
  CHECK(fig4.nontrivial);
  CHECK_FALSE(fig4.magic.magic);
  CHECK_FALSE(fig4.minimal);
  CHECK_FALSE(fig4.concentric.core_nontrivial);

  const VariantFlags fig20 = classify(fixtures::fig20());
  CHECK(fig20.concentric.core_nontrivial);
}
