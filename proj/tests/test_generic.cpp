#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "sdsq/fixtures.hpp"
#include "sdsq/generic.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;

TEST_CASE("expression parsing") {
  AffineExpr e = parse_expr("1-x");
  CHECK(e.constant == 1);
  CHECK(e.terms == std::map<char, Entry>{{'x', -1}});

  e = parse_expr("7");
  CHECK(e.constant == 7);
  CHECK(e.terms.empty());

  e = parse_expr("y-6");
  CHECK(e.constant == -6);
  CHECK(e.terms == std::map<char, Entry>{{'y', 1}});

  CHECK(parse_expr("2*x-3") == (AffineExpr{-3, {{'x', 2}}}));
  CHECK(parse_expr("-x") == AffineExpr::var('x', -1));
  CHECK(parse_expr("3+x") == parse_expr("x+3"));
  CHECK(parse_expr("x+x") == AffineExpr::var('x', 2));

  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("x+"), ParseError);
  CHECK_THROWS_AS(parse_expr("2x"), ParseError);
  CHECK_THROWS_AS(parse_expr("x*2"), ParseError);
  CHECK_THROWS_AS(parse_expr("X"), ParseError);
  CHECK_THROWS_AS(parse_expr("1--2"), ParseError);
}

TEST_CASE("canonical formatting and round trip") {
  CHECK(format_expr(parse_expr("x")) == "x");
  CHECK(format_expr(parse_expr("-x")) == "-x");
  CHECK(format_expr(parse_expr("1-x")) == "1-x");
  CHECK(format_expr(parse_expr("y-6")) == "y-6");
  CHECK(format_expr(parse_expr("3+x")) == "x+3");
  CHECK(format_expr(parse_expr("2*x-3")) == "2*x-3");
  CHECK(format_expr(parse_expr("-2-x")) == "-2-x");
  CHECK(format_expr(parse_expr("7")) == "7");

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    AffineExpr e;
    e.constant = rng.value_in_band(9);
    for (char name : {'x', 'y', 'z'})
      if (rng.below(2) == 0) {
        const Entry coeff = rng.value_in_band(3);
        if (coeff != 0) e.terms[name] = coeff;
      }
    CHECK(parse_expr(format_expr(e)) == e);
  }
}

TEST_CASE("generic verification accepts the reference generics") {
  CHECK(generic_verify(fixtures::fig13a()).ok);
  CHECK(generic_verify(fixtures::fig13b()).ok);
  CHECK(generic_verify(fixtures::fig14r()).ok);

  // fig12 is trivial: its border repeats 2-x.
  const GenericDiagnostic fig12 = generic_verify(fixtures::fig12());
  CHECK_FALSE(fig12.ok);
  CHECK(fig12.reason.find("border") != std::string::npos);
}

TEST_CASE("generic verification rejects single-cell corruptions") {
  GenericSquare broken = fixtures::fig14r();
  broken(0, 1) = AffineExpr::of(5);  // drop one x
  const GenericDiagnostic diag = generic_verify(broken);
  CHECK_FALSE(diag.ok);
  CHECK(diag.reason.find("not variable-free") != std::string::npos);

  GenericSquare b13a = fixtures::fig13a();
  b13a(2, 0) = AffineExpr::of(7);
  CHECK_FALSE(generic_verify(b13a).ok);

  GenericSquare b13b = fixtures::fig13b();
  b13b(5, 5) = parse_expr("x");
  CHECK_FALSE(generic_verify(b13b).ok);
}

TEST_CASE("forbidden values") {
  const ForbiddenSet fig12 = forbidden_values(fixtures::fig12());
  CHECK(fig12.single_variable_values == std::vector<Rational>{Rational(1)});

  const ForbiddenSet fig14r = forbidden_values(fixtures::fig14r());
  const std::vector<Rational> expected{Rational(-4), Rational(-3), Rational(-2),
                                       Rational(-1), Rational(0),  Rational(1),
                                       Rational(2),  Rational(3),  Rational(4)};
  CHECK(fig14r.single_variable_values == expected);

  const ForbiddenSet fig13a = forbidden_values(fixtures::fig13a());
  CHECK(fig13a.single_variable_values.empty());  // two variables
  CHECK(fig13a.constraints.size() <= 36);        // (2n-1)(2n-2)/2 pairs
  auto contains = [&](const char* text) {
    return std::find(fig13a.constraints.begin(), fig13a.constraints.end(),
                     parse_expr(text)) != fig13a.constraints.end();
  };
  CHECK(contains("2*x-1"));   // x = 1/2 collides x with 1-x
  CHECK(contains("x+y-7"));   // x vs 7-y, also 1-x vs y-6 after normalization
}

TEST_CASE("forbidden set matches direct border collision for random assignments") {
  Rng rng(17);
  const GenericSquare square = fixtures::fig13a();
  const ForbiddenSet forbidden = forbidden_values(square);
  const auto border = generic_border(square);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<char, Rational> assignment{{'x', Rational(rng.value_in_band(8))},
                                        {'y', Rational(rng.value_in_band(8))}};
    bool collision = false;
    for (std::size_t i = 0; i < border.size(); ++i)
      for (std::size_t j = i + 1; j < border.size(); ++j)
        if (border[i] != border[j] &&
            border[i].evaluate(assignment) == border[j].evaluate(assignment))
          collision = true;
    CHECK(forbidden.allows(assignment) == !collision);
  }
}

TEST_CASE("instantiation") {
  const Square fig12_at_3 = instantiate(fixtures::fig12(), {{'x', Rational(3)}});
  CHECK(fig12_at_3 == Square{{3, -1}, {-1, 3}});
  CHECK(row_sum(fig12_at_3, 0) == 2);
  CHECK(frequencies(fig12_at_3) == FrequencyTable{{-1, 2}, {3, 2}});

  CHECK_THROWS_WITH_AS(instantiate(fixtures::fig12(), {{'x', Rational(1)}}),
                       doctest::Contains("collide"), std::invalid_argument);

  const Square fig13a_inst = instantiate(
      fixtures::fig13a(), {{'x', Rational(-13)}, {'y', Rational(0)}});
  CHECK(is_nontrivial(fig13a_inst));

  CHECK_THROWS_AS(instantiate(fixtures::fig13a(), {{'x', Rational(-13)}}),
                  std::invalid_argument);  // y missing
  CHECK_THROWS_WITH_AS(
      instantiate(fixtures::fig14r(), {{'x', Rational(11, 2)}}),
      doctest::Contains("non-integer"), std::invalid_argument);

  // x = 5 reproduces the numeric source square.
  CHECK(instantiate(fixtures::fig14r(), {{'x', Rational(5)}}) == fixtures::fig14l());
}

TEST_CASE("substitution at a forbidden value breaks nontriviality") {
  for (Entry v : {-4, -3, -2, -1, 0, 1, 2, 3, 4}) {
    const Square broken =
        substitute_unchecked(fixtures::fig14r(), {{'x', Rational(v)}});
    CHECK_FALSE(is_nontrivial(broken));
  }
  const Square fig12_at_1 = substitute_unchecked(fixtures::fig12(), {{'x', Rational(1)}});
  CHECK_FALSE(is_nontrivial(fig12_at_1));
}

TEST_CASE("random non-forbidden substitutions all verify") {
  Rng rng(23);
  for (const GenericSquare& square : {fixtures::fig13a(), fixtures::fig14r()}) {
    const ForbiddenSet forbidden = forbidden_values(square);
    const bool trivial = !generic_verify(square).ok;
    int done = 0;
    while (done < 100) {
      std::map<char, Rational> assignment;
      for (char name : square.variables())
        assignment[name] = Rational(rng.value_in_band(40));
      if (!forbidden.allows(assignment)) continue;
      const Square numeric = instantiate(square, assignment);
      if (!trivial) CHECK(count_errors(numeric).total() == 0);
      ++done;
    }
  }
}

TEST_CASE("generic derivation") {
  const auto from_fig14l = derive_generic(fixtures::fig14l());
  CHECK(from_fig14l.size() == 2);  // x-family and its sign-flipped twin
  CHECK(std::find(from_fig14l.begin(), from_fig14l.end(), fixtures::fig14r()) !=
        from_fig14l.end());

  CHECK(derive_generic(fixtures::fig8a()).empty());
  CHECK(derive_generic(fixtures::fig8b()).empty());
  CHECK_THROWS_AS(derive_generic(fixtures::fig1()), std::invalid_argument);

  // Re-instantiating any derived generic at x = base reproduces the input.
  for (const GenericSquare& generic : from_fig14l) {
    bool reproduces = false;
    for (Entry base = -8; base <= 8; ++base) {
      try {
        if (instantiate(generic, {{'x', Rational(base)}}) == fixtures::fig14l())
          reproduces = true;
      } catch (const std::invalid_argument&) {
      }
    }
    CHECK(reproduces);
  }
}

TEST_CASE("partial replacement fails symbolic verification") {
  // Replacing 5 with x but leaving -5 alone leaves x terms in the sums.
  GenericSquare half(4);
  const Square source = fixtures::fig14l();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      if (source(r, c) == 5)
        half(r, c) = parse_expr("x");
      else
        half(r, c) = AffineExpr::of(source(r, c));
    }
  CHECK_FALSE(generic_verify(half).ok);
}

TEST_CASE("cancellation pattern") {
  const CancellationReport fig14r = cancellation_report(fixtures::fig14r());
  CHECK(fig14r.pattern_holds);
  CHECK(fig14r.variable_cells == 4);

  const CancellationReport fig13a = cancellation_report(fixtures::fig13a());
  CHECK(fig13a.pattern_holds);
  CHECK(fig13a.variable_cells == 8);

  GenericSquare constants(2);
  constants(0, 0) = AffineExpr::of(2);
  constants(0, 1) = AffineExpr::of(2);
  constants(1, 0) = AffineExpr::of(2);
  constants(1, 1) = AffineExpr::of(2);
  const CancellationReport none = cancellation_report(constants);
  CHECK(none.pattern_holds);
  CHECK(none.variable_cells == 0);
}

TEST_CASE("generic square text round trip") {
  const std::string text = format_generic_square(fixtures::fig13a());
  const GenericSquare reparsed = parse_generic_square(text);
  CHECK(reparsed == fixtures::fig13a());
  CHECK(format_generic_square(reparsed) == text);
}
