#include "sdsq/generic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sdsq/verify.hpp"

namespace sdsq {

GenericSquare::GenericSquare(
    std::initializer_list<std::initializer_list<const char*>> rows)
    : order_(rows.size()) {
  if (order_ == 0) throw std::invalid_argument("square order must be >= 1");
  cells_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_)
      throw std::invalid_argument("square rows must all have length n");
    for (const char* cell : row) cells_.push_back(parse_expr(cell));
  }
}

std::set<char> GenericSquare::variables() const {
  std::set<char> names;
  for (const AffineExpr& cell : cells_)
    for (const auto& [name, coeff] : cell.terms) names.insert(name);
  return names;
}

AffineExpr generic_row_sum(const GenericSquare& square, std::size_t r) {
  AffineExpr sum;
  for (std::size_t c = 0; c < square.order(); ++c) sum += square(r, c);
  return sum;
}

AffineExpr generic_col_sum(const GenericSquare& square, std::size_t c) {
  AffineExpr sum;
  for (std::size_t r = 0; r < square.order(); ++r) sum += square(r, c);
  return sum;
}

std::vector<AffineExpr> generic_border(const GenericSquare& square) {
  std::vector<AffineExpr> border;
  border.reserve(2 * square.order() - 1);
  for (auto [r, c] : border_positions(square.order()))
    border.push_back(square(r, c));
  return border;
}

GenericSquare parse_generic_square(std::string_view text) {
  std::vector<std::vector<AffineExpr>> rows;
  std::size_t line_no = 0;
  bool grid_started = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    std::istringstream stream{std::string(line)};
    std::string token;
    std::vector<AffineExpr> row;
    bool comment = false;
    while (stream >> token) {
      if (!grid_started && row.empty() && token.front() == '#') {
        comment = true;
        break;
      }
      try {
        row.push_back(parse_expr(token));
      } catch (const ParseError& err) {
        throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
      }
    }
    if (comment || row.empty()) continue;
    grid_started = true;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(line_no) + ": ragged grid row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no grid rows found");
  if (rows.size() != rows.front().size())
    throw ParseError("grid must be square");
  GenericSquare square(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) square(r, c) = rows[r][c];
  return square;
}

std::string format_generic_square(const GenericSquare& square) {
  std::string out;
  for (std::size_t r = 0; r < square.order(); ++r) {
    for (std::size_t c = 0; c < square.order(); ++c) {
      if (c > 0) out += ' ';
      out += format_expr(square(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
  return "row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1);
}

std::int64_t structural_count(const GenericSquare& square, const AffineExpr& expr) {
  std::int64_t count = 0;
  for (const AffineExpr& cell : square.cells())
    if (cell == expr) ++count;
  return count;
}

/// Conditions (a) and (b) for every tuple, reported per first failure.
GenericDiagnostic check_sums(const GenericSquare& square) {
  const std::size_t n = square.order();
  for (std::size_t r = 0; r < n; ++r) {
    const AffineExpr sum = generic_row_sum(square, r);
    if (!sum.is_constant())
      return {false, "row " + std::to_string(r + 1) + " sum is not variable-free (" +
                         format_expr(sum) + ")"};
    if (sum.constant != structural_count(square, square(r, n - 1)))
      return {false, "row " + std::to_string(r + 1) + " sum " +
                         std::to_string(sum.constant) +
                         " does not match the count of its rightmost entry"};
  }
  for (std::size_t c = 0; c < n; ++c) {
    const AffineExpr sum = generic_col_sum(square, c);
    if (!sum.is_constant())
      return {false, "column " + std::to_string(c + 1) +
                         " sum is not variable-free (" + format_expr(sum) + ")"};
    if (sum.constant != structural_count(square, square(n - 1, c)))
      return {false, "column " + std::to_string(c + 1) + " sum " +
                         std::to_string(sum.constant) +
                         " does not match the count of its bottom entry"};
  }
  return {true, {}};
}

GenericDiagnostic check_coverage(const GenericSquare& square) {
  const std::set<AffineExpr> border_set = [&] {
    auto border = generic_border(square);
    return std::set<AffineExpr>(border.begin(), border.end());
  }();
  for (std::size_t r = 0; r < square.order(); ++r)
    for (std::size_t c = 0; c < square.order(); ++c)
      if (!border_set.contains(square(r, c)))
        return {false, "entry at " + cell_name(r, c) + " (" +
                           format_expr(square(r, c)) +
                           ") does not occur in the border"};
  return {true, {}};
}

}  // namespace

GenericDiagnostic generic_verify(const GenericSquare& square) {
  GenericDiagnostic sums = check_sums(square);
  if (!sums.ok) return sums;

  const auto border = generic_border(square);
  const std::set<AffineExpr> border_set(border.begin(), border.end());
  if (border_set.size() != border.size())
    return {false, "border expressions are not pairwise distinct"};

  return check_coverage(square);
}

namespace {

/// Primitive normalization of a nonzero affine expression: divide through by
/// the gcd of all coefficients and make the leading coefficient positive.
AffineExpr normalize_constraint(AffineExpr expr) {
  Entry g = expr.constant < 0 ? -expr.constant : expr.constant;
  for (const auto& [name, coeff] : expr.terms)
    g = std::gcd(g, coeff < 0 ? -coeff : coeff);
  if (g > 1) {
    expr.constant /= g;
    for (auto& [name, coeff] : expr.terms) coeff /= g;
  }
  const Entry lead = expr.terms.empty() ? expr.constant : expr.terms.begin()->second;
  if (lead < 0) return -expr;
  return expr;
}

}  // namespace

bool ForbiddenSet::allows(const std::map<char, Rational>& assignment) const {
  for (const AffineExpr& constraint : constraints)
    if (constraint.evaluate(assignment) == Rational(0)) return false;
  return true;
}

ForbiddenSet forbidden_values(const GenericSquare& square) {
  // Trivial generics (duplicated border expressions) are analyzed too, as
  // long as the sum and coverage conditions hold symbolically.
  GenericDiagnostic sums = check_sums(square);
  if (!sums.ok) throw std::invalid_argument("not symbolically s-d: " + sums.reason);
  GenericDiagnostic coverage = check_coverage(square);
  if (!coverage.ok)
    throw std::invalid_argument("not symbolically s-d: " + coverage.reason);

  const auto border = generic_border(square);
  std::set<AffineExpr> seen;
  ForbiddenSet result;
  for (std::size_t i = 0; i < border.size(); ++i) {
    for (std::size_t j = i + 1; j < border.size(); ++j) {
      if (border[i] == border[j]) continue;
      AffineExpr diff = border[i] - border[j];
      if (diff.is_constant()) continue;  // constants never collide
      diff = normalize_constraint(std::move(diff));
      if (seen.insert(diff).second) result.constraints.push_back(diff);
    }
  }

  if (square.variables().size() == 1) {
    std::set<Rational> roots;
    for (const AffineExpr& constraint : result.constraints) {
      const Entry coeff = constraint.terms.begin()->second;
      roots.insert(Rational(-constraint.constant, coeff));
    }
    result.single_variable_values.assign(roots.begin(), roots.end());
  }
  return result;
}

namespace {

Square evaluate_cells(const GenericSquare& square,
                      const std::map<char, Rational>& assignment) {
  const std::size_t n = square.order();
  for (char name : square.variables())
    if (!assignment.contains(name))
      throw std::invalid_argument(std::string("no value given for variable '") +
                                  name + "'");
  Square out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational value = square(r, c).evaluate(assignment);
      if (!value.is_integer())
        throw std::invalid_argument("entry at " + cell_name(r, c) +
                                    " evaluates to the non-integer " +
                                    format_rational(value));
      out(r, c) = value.num;
    }
  }
  return out;
}

}  // namespace

Square substitute_unchecked(const GenericSquare& square,
                            const std::map<char, Rational>& assignment) {
  return evaluate_cells(square, assignment);
}

Square instantiate(const GenericSquare& square,
                   const std::map<char, Rational>& assignment) {
  const auto positions = border_positions(square.order());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const auto [ri, ci] = positions[i];
      const auto [rj, cj] = positions[j];
      if (square(ri, ci) == square(rj, cj)) continue;
      if (square(ri, ci).evaluate(assignment) == square(rj, cj).evaluate(assignment))
        throw std::invalid_argument(
            "forbidden assignment: border cells at " + cell_name(ri, ci) +
            " and " + cell_name(rj, cj) + " collide");
    }
  }
  Square out = evaluate_cells(square, assignment);
  if (generic_verify(square).ok && !is_nontrivial(out))
    throw std::logic_error("instantiation of a valid generic is not nontrivial");
  return out;
}

std::vector<GenericSquare> derive_generic(const Square& square) {
  if (!is_nontrivial(square))
    throw std::invalid_argument("generic derivation requires a nontrivial s-d square");

  const std::size_t n = square.order();
  std::vector<Entry> values;
  for (const auto& [value, count] : frequencies(square)) values.push_back(value);

  std::vector<GenericSquare> found;
  std::set<GenericSquare> seen;

  const std::size_t others = values.size() - 1;
  std::vector<int> coeff(values.size(), 0);
  for (std::size_t base_index = 0; base_index < values.size(); ++base_index) {
    const Entry base = values[base_index];
    // Every map d over the non-base values, d in {-1, 0, +1}; d(base) = +1.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < others; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t rest = code;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i == base_index) {
          coeff[i] = 1;
        } else {
          coeff[i] = static_cast<int>(rest % 3) - 1;
          rest /= 3;
        }
      }

      GenericSquare candidate(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const Entry w = square(r, c);
          const std::size_t k =
              std::lower_bound(values.begin(), values.end(), w) - values.begin();
          const Entry d = coeff[k];
          AffineExpr cell = AffineExpr::var('x', d);
          cell.constant = w - d * base;
          candidate(r, c) = std::move(cell);
        }
      }
      if (generic_verify(candidate).ok && seen.insert(candidate).second)
        found.push_back(candidate);
    }
  }
  return found;
}

CancellationReport cancellation_report(const GenericSquare& square) {
  const std::size_t n = square.order();
  CancellationReport report;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const AffineExpr part = square(r, c).variable_part();
      if (part.terms.empty()) continue;
      ++report.variable_cells;
      const AffineExpr negated = -part;
      bool in_row = false, in_col = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c && square(r, k).variable_part() == negated) in_row = true;
        if (k != r && square(k, c).variable_part() == negated) in_col = true;
      }
      if (!in_row || !in_col) {
        report.pattern_holds = false;
        report.violations.emplace_back(r, c);
      }
    }
  }
  return report;
}

}  // namespace sdsq
