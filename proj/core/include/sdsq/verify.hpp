#pragma once

#include <cstdint>

#include "sdsq/square.hpp"

namespace sdsq {

/// Violation counts for the four self-description conditions:
///  1. every border value appears exactly once in the border,
///  2. every non-border value also appears in the border,
///  3. each row sum equals the frequency of the row's rightmost entry,
///  4. each column sum equals the frequency of the column's bottom entry.
/// Condition 1 is charged one error per extra duplicate; condition 2 one
/// error per offending interior cell.
struct ErrorReport {
  std::int64_t border_duplication_errors = 0;
  std::int64_t interior_coverage_errors = 0;
  std::int64_t row_errors = 0;
  std::int64_t col_errors = 0;

  std::int64_t total() const {
    return border_duplication_errors + interior_coverage_errors + row_errors +
           col_errors;
  }
};

ErrorReport count_errors(const Square& square);

/// Conditions 3 and 4 only; border completeness is not considered.
bool is_self_descriptive(const Square& square);

/// All four conditions: a self-descriptive square whose border lists every
/// distinct value exactly once.
bool is_nontrivial(const Square& square);

/// A diagonal is self-descriptive when its sum equals the frequency of at
/// least one of its two end entries; either corner of the pair may match.
struct MagicReport {
  bool applicable = false;  // requires a nontrivial square
  bool magic = false;
  std::int64_t main_diagonal_sum = 0;
  std::int64_t co_diagonal_sum = 0;
  bool main_matches_top_left = false;
  bool main_matches_bottom_right = false;
  bool co_matches_top_right = false;
  bool co_matches_bottom_left = false;
};

MagicReport is_magic(const Square& square);

/// A tuple is bi-directional when its first and last entries have the same
/// frequency, both equal to the tuple sum.
struct BidirectionalReport {
  bool rows = false;
  bool cols = false;
};

BidirectionalReport is_bidirectional(const Square& square);

/// Magic, all rows and columns bi-directional, and each diagonal's sum equal
/// to the frequency of both of its end entries.
bool is_perfect(const Square& square);

/// Distinct entries are exactly the unbroken run 1-n .. n-1.
bool is_minimal(const Square& square);

/// The centered (n-2) x (n-2) core of a square with n >= 3.
Square core_of(const Square& square);

struct ConcentricReport {
  bool applicable = false;  // n >= 3
  bool core_self_descriptive = false;
  bool core_nontrivial = false;
};

ConcentricReport concentric_report(const Square& square);

/// True iff n >= 3 and the core is itself a nontrivial s-d square.
bool is_concentric(const Square& square);

/// For minimal nontrivial squares the bottom-right entry k is even and occurs
/// exactly k/2 times. Returns the check result; throws std::invalid_argument
/// when the square is not both minimal and nontrivial.
bool check_minimal_corner_theorem(const Square& square);

struct VariantFlags {
  bool self_descriptive = false;
  bool nontrivial = false;
  MagicReport magic;
  bool bidirectional_rows = false;
  bool bidirectional_cols = false;
  bool perfect = false;
  bool minimal = false;
  ConcentricReport concentric;
};

VariantFlags classify(const Square& square);

}  // namespace sdsq
