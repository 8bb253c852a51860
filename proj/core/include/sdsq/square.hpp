#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdsq {

using Entry = std::int64_t;

/// Thrown when square/expression text cannot be parsed. what() carries a
/// human-readable message with the offending line or column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An n x n grid of integers, indexed (row, col), 0-based, row-major.
/// Row and column sums and value frequencies are always derived, never stored.
class Square {
 public:
  explicit Square(std::size_t order, Entry fill = 0)
      : order_(order), cells_(order * order, fill) {
    if (order == 0) throw std::invalid_argument("square order must be >= 1");
  }

  Square(std::initializer_list<std::initializer_list<Entry>> rows);

  std::size_t order() const { return order_; }

  Entry operator()(std::size_t r, std::size_t c) const {
    return cells_[r * order_ + c];
  }
  Entry& operator()(std::size_t r, std::size_t c) {
    return cells_[r * order_ + c];
  }

  /// Bounds-checked access.
  Entry at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Entry value);

  std::span<const Entry> cells() const { return cells_; }

  friend bool operator==(const Square&, const Square&) = default;
  friend bool operator<(const Square& a, const Square& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.cells_ < b.cells_;
  }

 private:
  std::size_t order_;
  std::vector<Entry> cells_;
};

/// Occurrence count of each value over all n^2 cells. Values that do not
/// appear are not keys; counts sum to n^2.
using FrequencyTable = std::map<Entry, std::int64_t>;

/// The 2n-1 cells of the right-hand column (top to bottom) followed by the
/// bottom row (left to right, excluding the corner already listed).
struct Border {
  std::vector<Entry> values;
};

Entry row_sum(const Square& square, std::size_t r);
Entry col_sum(const Square& square, std::size_t c);
FrequencyTable frequencies(const Square& square);
Border border_cells(const Square& square);

/// Positions of the border cells in the order used by border_cells.
std::vector<std::pair<std::size_t, std::size_t>> border_positions(std::size_t order);

inline bool is_border_cell(std::size_t order, std::size_t r, std::size_t c) {
  return r == order - 1 || c == order - 1;
}

/// Reads the plain grid text format: n lines of n whitespace-separated
/// integers. Leading lines starting with '#' are skipped.
Square parse_square(std::string_view text);

/// Canonical grid text: one line per row, single-space separated, trailing
/// newline. Output parses back to an equal square.
std::string format_square(const Square& square);

}  // namespace sdsq
