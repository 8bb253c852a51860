#include "sdsq/expr.hpp"

#include <cctype>
#include <numeric>

namespace sdsq {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(Rational a, Rational b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(Rational a, Rational b) {
  return Rational(a.num * b.num, a.den * b.den);
}

std::string format_rational(const Rational& value) {
  if (value.den == 1) return std::to_string(value.num);
  return std::to_string(value.num) + "/" + std::to_string(value.den);
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos)
      return Rational(std::stoll(std::string(text)));
    return Rational(std::stoll(std::string(text.substr(0, slash))),
                    std::stoll(std::string(text.substr(slash + 1))));
  } catch (const std::logic_error&) {
    throw ParseError("'" + std::string(text) + "' is not a rational number");
  }
}

AffineExpr AffineExpr::var(char name, Entry coeff) {
  AffineExpr expr;
  if (coeff != 0) expr.terms[name] = coeff;
  return expr;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& other) {
  constant += other.constant;
  for (const auto& [name, coeff] : other.terms) {
    const Entry merged = (terms[name] += coeff);
    if (merged == 0) terms.erase(name);
  }
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& other) {
  return *this += -other;
}

AffineExpr operator-(const AffineExpr& a) {
  AffineExpr out;
  out.constant = -a.constant;
  for (const auto& [name, coeff] : a.terms) out.terms[name] = -coeff;
  return out;
}

Rational AffineExpr::evaluate(const std::map<char, Rational>& assignment) const {
  Rational value(constant);
  for (const auto& [name, coeff] : terms) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument(std::string("variable '") + name +
                                  "' has no assignment");
    value = value + Rational(coeff) * it->second;
  }
  return value;
}

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(text) + "', column " +
                     std::to_string(pos + 1) + ": " + what);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  Entry parse_int() {
    const std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail("expected digits");
    try {
      return std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of range");
    }
  }

  /// One signed term accumulated into expr.
  void parse_term(AffineExpr& expr, Entry sign) {
    if (done()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Entry value = parse_int();
      if (!done() && peek() == '*') {
        ++pos;
        if (done() || !std::islower(static_cast<unsigned char>(peek())))
          fail("expected a variable after '*'");
        expr += AffineExpr::var(text[pos++], sign * value);
      } else {
        expr += AffineExpr::of(sign * value);
      }
    } else if (std::islower(static_cast<unsigned char>(peek()))) {
      expr += AffineExpr::var(text[pos++], sign);
    } else {
      fail("expected an integer or variable");
    }
  }

  AffineExpr parse() {
    AffineExpr expr;
    Entry sign = 1;
    if (!done() && peek() == '-') {
      sign = -1;
      ++pos;
    }
    parse_term(expr, sign);
    while (!done()) {
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        fail("expected '+' or '-'");
      ++pos;
      parse_term(expr, sign);
    }
    return expr;
  }
};

void append_term(std::string& out, char name, Entry coeff, bool leading) {
  if (coeff < 0)
    out += '-';
  else if (!leading)
    out += '+';
  const Entry magnitude = coeff < 0 ? -coeff : coeff;
  if (magnitude != 1) {
    out += std::to_string(magnitude);
    out += '*';
  }
  out += name;
}

}  // namespace

AffineExpr parse_expr(std::string_view text) {
  if (text.empty()) throw ParseError("empty expression");
  ExprParser parser{text};
  return parser.parse();
}

std::string format_expr(const AffineExpr& expr) {
  if (expr.terms.empty()) return std::to_string(expr.constant);

  std::string out;
  const auto& [first_name, first_coeff] = *expr.terms.begin();
  if (expr.constant != 0 && expr.terms.size() == 1 && first_coeff < 0) {
    // "1-x" style: constant leads when the sole coefficient is negative.
    out += std::to_string(expr.constant);
    append_term(out, first_name, first_coeff, false);
    return out;
  }
  bool leading = true;
  for (const auto& [name, coeff] : expr.terms) {
    append_term(out, name, coeff, leading);
    leading = false;
  }
  if (expr.constant != 0) {
    if (expr.constant > 0) out += '+';
    out += std::to_string(expr.constant);
  }
  return out;
}

}  // namespace sdsq
