#include "sdsq/verify.hpp"

#include <set>

namespace sdsq {

namespace {

std::int64_t freq_of(const FrequencyTable& table, Entry v) {
  auto it = table.find(v);
  return it == table.end() ? 0 : it->second;
}

}  // namespace

ErrorReport count_errors(const Square& square) {
  const std::size_t n = square.order();
  const FrequencyTable freq = frequencies(square);

  ErrorReport report;

  std::set<Entry> border_values;
  for (auto [r, c] : border_positions(n)) border_values.insert(square(r, c));
  report.border_duplication_errors =
      static_cast<std::int64_t>(2 * n - 1) -
      static_cast<std::int64_t>(border_values.size());

  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c)
      if (!border_values.contains(square(r, c))) ++report.interior_coverage_errors;

  for (std::size_t r = 0; r < n; ++r)
    if (row_sum(square, r) != freq_of(freq, square(r, n - 1))) ++report.row_errors;
  for (std::size_t c = 0; c < n; ++c)
    if (col_sum(square, c) != freq_of(freq, square(n - 1, c))) ++report.col_errors;

  return report;
}

bool is_self_descriptive(const Square& square) {
  const ErrorReport report = count_errors(square);
  return report.row_errors == 0 && report.col_errors == 0;
}

bool is_nontrivial(const Square& square) { return count_errors(square).total() == 0; }

MagicReport is_magic(const Square& square) {
  MagicReport report;
  if (!is_nontrivial(square)) return report;
  report.applicable = true;

  const std::size_t n = square.order();
  const FrequencyTable freq = frequencies(square);
  for (std::size_t i = 0; i < n; ++i) {
    report.main_diagonal_sum += square(i, i);
    report.co_diagonal_sum += square(i, n - 1 - i);
  }
  report.main_matches_top_left =
      report.main_diagonal_sum == freq_of(freq, square(0, 0));
  report.main_matches_bottom_right =
      report.main_diagonal_sum == freq_of(freq, square(n - 1, n - 1));
  report.co_matches_top_right =
      report.co_diagonal_sum == freq_of(freq, square(0, n - 1));
  report.co_matches_bottom_left =
      report.co_diagonal_sum == freq_of(freq, square(n - 1, 0));
  report.magic =
      (report.main_matches_top_left || report.main_matches_bottom_right) &&
      (report.co_matches_top_right || report.co_matches_bottom_left);
  return report;
}

BidirectionalReport is_bidirectional(const Square& square) {
  const std::size_t n = square.order();
  const FrequencyTable freq = frequencies(square);

  BidirectionalReport report{true, true};
  for (std::size_t r = 0; r < n; ++r) {
    const Entry sum = row_sum(square, r);
    if (freq_of(freq, square(r, 0)) != sum || freq_of(freq, square(r, n - 1)) != sum)
      report.rows = false;
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Entry sum = col_sum(square, c);
    if (freq_of(freq, square(0, c)) != sum || freq_of(freq, square(n - 1, c)) != sum)
      report.cols = false;
  }
  return report;
}

bool is_perfect(const Square& square) {
  const MagicReport magic = is_magic(square);
  if (!magic.applicable || !magic.magic) return false;
  const BidirectionalReport bidir = is_bidirectional(square);
  if (!bidir.rows || !bidir.cols) return false;
  return magic.main_matches_top_left && magic.main_matches_bottom_right &&
         magic.co_matches_top_right && magic.co_matches_bottom_left;
}

bool is_minimal(const Square& square) {
  const std::int64_t n = static_cast<std::int64_t>(square.order());
  const FrequencyTable freq = frequencies(square);
  if (freq.size() != static_cast<std::size_t>(2 * n - 1)) return false;
  for (Entry v = 1 - n; v <= n - 1; ++v)
    if (!freq.contains(v)) return false;
  return true;
}

Square core_of(const Square& square) {
  const std::size_t n = square.order();
  if (n < 3) throw std::invalid_argument("core requires order >= 3");
  Square core(n - 2);
  for (std::size_t r = 0; r + 2 < n; ++r)
    for (std::size_t c = 0; c + 2 < n; ++c) core(r, c) = square(r + 1, c + 1);
  return core;
}

ConcentricReport concentric_report(const Square& square) {
  ConcentricReport report;
  if (square.order() < 3) return report;
  report.applicable = true;
  const Square core = core_of(square);
  report.core_self_descriptive = is_self_descriptive(core);
  report.core_nontrivial = is_nontrivial(core);
  return report;
}

bool is_concentric(const Square& square) {
  const ConcentricReport report = concentric_report(square);
  return report.applicable && report.core_nontrivial;
}

bool check_minimal_corner_theorem(const Square& square) {
  if (!is_minimal(square) || !is_nontrivial(square))
    throw std::invalid_argument(
        "corner theorem applies only to minimal nontrivial squares");
  const std::size_t n = square.order();
  const Entry corner = square(n - 1, n - 1);
  if (corner % 2 != 0) return false;
  const FrequencyTable freq = frequencies(square);
  auto it = freq.find(corner);
  return it != freq.end() && it->second == corner / 2;
}

VariantFlags classify(const Square& square) {
  VariantFlags flags;
  flags.self_descriptive = is_self_descriptive(square);
  flags.nontrivial = is_nontrivial(square);
  flags.magic = is_magic(square);
  const BidirectionalReport bidir = is_bidirectional(square);
  flags.bidirectional_rows = bidir.rows;
  flags.bidirectional_cols = bidir.cols;
  flags.perfect = is_perfect(square);
  flags.minimal = is_minimal(square);
  flags.concentric = concentric_report(square);
  return flags;
}

}  // namespace sdsq
