#pragma once

#include <span>
#include <vector>

#include "sdsq/square.hpp"

namespace sdsq {

/// Flattened cells of a square's standard normal form; equal keys identify
/// equivalent nontrivial s-d squares.
using SnfKey = std::vector<Entry>;

/// Reorders the first n-1 rows: result row i takes input row perm[i].
/// perm must be a permutation of {0, .., n-2}; the last row never moves.
Square permute_rows(const Square& square, std::span<const std::size_t> perm);
Square permute_cols(const Square& square, std::span<const std::size_t> perm);

/// Transpose about the main (\) diagonal.
Square reflect(const Square& square);

/// True when the first n-1 bottom-row entries ascend left to right, the first
/// n-1 right-column entries ascend top to bottom, and the top-right entry
/// exceeds the bottom-left one. Order 1 squares are in SNF by convention.
bool in_standard_normal_form(const Square& square);

/// The unique equivalence-class representative in standard normal form.
/// Requires a nontrivial s-d square (border values distinct make the sorts
/// strict and the corner comparison decisive); throws otherwise.
Square to_snf(const Square& square);

SnfKey snf_key(const Square& square);

/// True iff both squares reduce to the same standard normal form.
bool equivalent(const Square& a, const Square& b);

/// True iff both squares have identical value multisets. Requires equal
/// orders.
bool is_anagram(const Square& a, const Square& b);

/// Every distinct square reachable by row/column permutations (the last
/// row/column fixed) and reflection; sorted. Size divides (n-1)!^2 * 2 with
/// equality when the square has no self-coincidence under the group.
std::vector<Square> equivalence_class(const Square& square,
                                      std::size_t max_order = 5);

}  // namespace sdsq
