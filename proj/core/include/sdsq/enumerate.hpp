#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdsq/square.hpp"

namespace sdsq {

enum class Dedupe { raw, up_to_equivalence };

struct EnumConfig {
  std::size_t order = 3;
  Entry max_abs = 4;
  Dedupe dedupe = Dedupe::raw;
  bool include_trivial = false;
  /// Orders above this are refused; raise explicitly for long runs.
  std::size_t order_guard = 4;
};

/// Complete list of squares with all entries in [-max_abs, +max_abs] that are
/// nontrivially s-d (or merely s-d when include_trivial is set). Border cells
/// are assigned first so the border-distinctness, parity, and frequency-budget
/// prunes fire as early as possible. Results are sorted; with
/// Dedupe::up_to_equivalence each nontrivial class is represented by its
/// standard normal form.
std::vector<Square> enumerate_all(const EnumConfig& config);

/// True iff every order-3 result has bottom-row sum 1 or 3.
bool check_three_by_three_bound(std::span<const Square> results);

/// Nontrivial squares per variant over an enumerated set.
struct VariantCounts {
  std::int64_t self_descriptive = 0;
  std::int64_t minimal = 0;
  std::int64_t magic = 0;
  std::int64_t minimal_magic = 0;
  std::int64_t perfect = 0;
  std::int64_t concentric = 0;
};

VariantCounts count_by_variant(std::span<const Square> results);

}  // namespace sdsq
