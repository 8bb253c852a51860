#include "sdsq/canon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sdsq/verify.hpp"

namespace sdsq {

namespace {

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n - 1)
    throw std::invalid_argument("permutation must cover exactly the first n-1 indices");
  std::vector<bool> seen(n - 1, false);
  for (std::size_t i : perm) {
    if (i >= n - 1)
      throw std::invalid_argument("permutation may not touch the last row/column");
    if (seen[i]) throw std::invalid_argument("indices repeat in permutation");
    seen[i] = true;
  }
}

/// Stable sort of the first n-1 rows by their right-column entry, then the
/// first n-1 columns by their bottom-row entry. Keys are strict for
/// nontrivial squares, so stability is immaterial there.
Square sort_to_normal_order(const Square& square) {
  const std::size_t n = square.order();
  std::vector<std::size_t> cols(n - 1);
  std::iota(cols.begin(), cols.end(), 0);
  std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    return square(n - 1, a) < square(n - 1, b);
  });
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
    return square(a, n - 1) < square(b, n - 1);
  });
  return permute_rows(permute_cols(square, cols), rows);
}

}  // namespace

Square permute_rows(const Square& square, std::span<const std::size_t> perm) {
  const std::size_t n = square.order();
  check_permutation(perm, n);
  Square out(n);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = square(perm[r], c);
  for (std::size_t c = 0; c < n; ++c) out(n - 1, c) = square(n - 1, c);
  return out;
}

Square permute_cols(const Square& square, std::span<const std::size_t> perm) {
  const std::size_t n = square.order();
  check_permutation(perm, n);
  Square out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) out(r, c) = square(r, perm[c]);
    out(r, n - 1) = square(r, n - 1);
  }
  return out;
}

Square reflect(const Square& square) {
  const std::size_t n = square.order();
  Square out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = square(c, r);
  return out;
}

bool in_standard_normal_form(const Square& square) {
  const std::size_t n = square.order();
  if (n == 1) return true;
  for (std::size_t c = 0; c + 2 < n; ++c)
    if (square(n - 1, c) >= square(n - 1, c + 1)) return false;
  for (std::size_t r = 0; r + 2 < n; ++r)
    if (square(r, n - 1) >= square(r + 1, n - 1)) return false;
  return square(0, n - 1) > square(n - 1, 0);
}

Square to_snf(const Square& square) {
  if (!is_nontrivial(square))
    throw std::invalid_argument(
        "standard normal form is defined only for nontrivial s-d squares");
  if (square.order() == 1) return square;

  const Square sorted = sort_to_normal_order(square);
  if (in_standard_normal_form(sorted)) return sorted;
  const Square reflected = sort_to_normal_order(reflect(square));
  if (!in_standard_normal_form(reflected))
    throw std::logic_error("no orientation satisfies standard normal form");
  return reflected;
}

SnfKey snf_key(const Square& square) {
  const Square snf = to_snf(square);
  return SnfKey(snf.cells().begin(), snf.cells().end());
}

bool equivalent(const Square& a, const Square& b) {
  if (a.order() != b.order()) return false;
  return to_snf(a) == to_snf(b);
}

bool is_anagram(const Square& a, const Square& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("anagram comparison requires equal orders");
  return frequencies(a) == frequencies(b);
}

std::vector<Square> equivalence_class(const Square& square, std::size_t max_order) {
  const std::size_t n = square.order();
  if (n > max_order)
    throw std::invalid_argument("order too large for class materialization");
  if (!is_nontrivial(square))
    throw std::invalid_argument("equivalence classes are defined for nontrivial squares");

  std::vector<std::size_t> identity(n - 1);
  std::iota(identity.begin(), identity.end(), 0);

  std::set<Square> members;
  std::vector<std::size_t> row_perm = identity;
  do {
    const Square rows_done = permute_rows(square, row_perm);
    std::vector<std::size_t> col_perm = identity;
    do {
      const Square image = permute_cols(rows_done, col_perm);
      members.insert(image);
      members.insert(reflect(image));
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));

  return {members.begin(), members.end()};
}

}  // namespace sdsq
