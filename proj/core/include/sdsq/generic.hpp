#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sdsq/expr.hpp"
#include "sdsq/square.hpp"

namespace sdsq {

/// An n x n grid of affine expressions. A valid generic square is nontrivially
/// self-descriptive for every substitution outside its forbidden set.
class GenericSquare {
 public:
  explicit GenericSquare(std::size_t order)
      : order_(order), cells_(order * order) {
    if (order == 0) throw std::invalid_argument("square order must be >= 1");
  }

  GenericSquare(std::initializer_list<std::initializer_list<const char*>> rows);

  std::size_t order() const { return order_; }
  const AffineExpr& operator()(std::size_t r, std::size_t c) const {
    return cells_[r * order_ + c];
  }
  AffineExpr& operator()(std::size_t r, std::size_t c) {
    return cells_[r * order_ + c];
  }
  std::span<const AffineExpr> cells() const { return cells_; }

  std::set<char> variables() const;

  friend bool operator==(const GenericSquare&, const GenericSquare&) = default;
  friend bool operator<(const GenericSquare& a, const GenericSquare& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.cells_ < b.cells_;
  }

 private:
  std::size_t order_;
  std::vector<AffineExpr> cells_;
};

AffineExpr generic_row_sum(const GenericSquare& square, std::size_t r);
AffineExpr generic_col_sum(const GenericSquare& square, std::size_t c);
std::vector<AffineExpr> generic_border(const GenericSquare& square);

GenericSquare parse_generic_square(std::string_view text);
std::string format_generic_square(const GenericSquare& square);

struct GenericDiagnostic {
  bool ok = false;
  std::string reason;  // first failing condition, empty when ok
};

/// Symbolic self-description: (a) every row/column sum is variable-free,
/// (b) each sum equals the count of cells structurally equal to the tuple's
/// terminal expression, (c) the 2n-1 border expressions are pairwise
/// distinct, (d) every cell expression occurs in the border.
GenericDiagnostic generic_verify(const GenericSquare& square);

/// Substitutions to avoid: each entry, read as "expression != 0", is the
/// difference of two structurally distinct border cells. Assignments
/// solving any entry collide two border cells and break self-description.
struct ForbiddenSet {
  std::vector<AffineExpr> constraints;
  /// Exact roots, populated when the square uses exactly one variable.
  std::vector<Rational> single_variable_values;

  bool allows(const std::map<char, Rational>& assignment) const;
};

/// Requires the square to be symbolically self-descriptive; squares failing
/// only the border-distinctness condition (trivial generics) are accepted and
/// analyzed over their structurally distinct border pairs.
ForbiddenSet forbidden_values(const GenericSquare& square);

/// Substitutes the assignment. Throws when a variable is missing, a cell
/// value is non-integral, or two structurally distinct border cells collide
/// (the message names both cells, 1-based).
Square instantiate(const GenericSquare& square,
                   const std::map<char, Rational>& assignment);

/// Substitution without the collision check; cell values must still be
/// integral. Intended for analyzing what happens at forbidden values.
Square substitute_unchecked(const GenericSquare& square,
                            const std::map<char, Rational>& assignment);

/// All single-variable generics reachable by replacing each distinct value w
/// with d(w)*x + (w - d(w)*b), d(w) in {-1, 0, +1}, over every base value b
/// with d(b) = +1. Only candidates passing generic_verify are returned; the
/// list is empty when the square admits no generic of this family.
std::vector<GenericSquare> derive_generic(const Square& square);

/// Whether every variable-carrying cell sees its negated variable part
/// elsewhere in both its row and its column (the cancellation that keeps
/// sums variable-free).
struct CancellationReport {
  bool pattern_holds = true;
  std::size_t variable_cells = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

CancellationReport cancellation_report(const GenericSquare& square);

}  // namespace sdsq
