#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "sdsq/square.hpp"

namespace sdsq {

/// Exact rational with positive denominator in lowest terms. Arithmetic is
/// 64-bit; intended for the small values arising in forbidden-value analysis
/// and substitution.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool is_integer() const { return den == 1; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

std::string format_rational(const Rational& value);
Rational parse_rational(std::string_view text);

/// Integer constant plus integer-coefficient terms over single-letter
/// variables. Zero coefficients are never stored, so structural equality of
/// the (constant, terms) pair is semantic equality.
struct AffineExpr {
  Entry constant = 0;
  std::map<char, Entry> terms;

  static AffineExpr of(Entry constant) { return AffineExpr{constant, {}}; }
  static AffineExpr var(char name, Entry coeff = 1);

  bool is_constant() const { return terms.empty(); }

  /// The terms alone, constant dropped.
  AffineExpr variable_part() const { return AffineExpr{0, terms}; }

  AffineExpr& operator+=(const AffineExpr& other);
  AffineExpr& operator-=(const AffineExpr& other);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator-(const AffineExpr& a);

  Rational evaluate(const std::map<char, Rational>& assignment) const;

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
  friend bool operator<(const AffineExpr& a, const AffineExpr& b) {
    if (a.constant != b.constant) return a.constant < b.constant;
    return a.terms < b.terms;
  }
};

/// Grammar: EXPR := TERM (('+'|'-') TERM)*; TERM := INT | [INT '*']? VAR;
/// VAR := a-z; INT := decimal digits, with an optional leading '-' on the
/// first term. No whitespace.
AffineExpr parse_expr(std::string_view text);

/// Canonical rendering: bare term when the constant is 0 ("x", "-x");
/// otherwise the variable term leads when its coefficient is positive
/// ("x+3", "y-6") and the constant leads when it is negative ("1-x").
std::string format_expr(const AffineExpr& expr);

}  // namespace sdsq
