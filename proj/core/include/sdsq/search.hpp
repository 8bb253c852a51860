#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>

#include "sdsq/square.hpp"
#include "sdsq/verify.hpp"

namespace sdsq {

enum class Variant { plain, magic, bidirectional, perfect, minimal, concentric };

std::string_view variant_name(Variant variant);
std::optional<Variant> parse_variant(std::string_view name);

/// Extra objective terms for constrained searches; 0 for plain. A square with
/// count_errors total 0 and variant_errors 0 is a valid square of the
/// requested variant.
std::int64_t variant_errors(const Square& square, Variant variant);

/// Deterministic RNG: identical seeds give identical draw sequences on every
/// platform (mt19937_64 plus rejection sampling).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [-max_abs, +max_abs].
  Entry value_in_band(Entry max_abs);

 private:
  std::mt19937_64 engine_;
};

struct SearchConfig {
  std::size_t order = 4;
  Entry max_abs = 4;
  int mutations_per_iteration = 3;
  std::uint64_t rng_seed = 0;
  std::uint64_t max_iterations = 10'000'000;  // 0 = unbounded
  std::uint64_t restart_interval = 100'000;   // 0 = never restart
  Variant variant = Variant::plain;

  void validate() const;
};

/// Mutable solver state with incrementally maintained tuple sums, value
/// counts (global and border-restricted), and the cached error total
/// (count_errors plus variant penalty). Exclusively owned by one thread.
class SearchState {
 public:
  SearchState(Square grid, Entry max_abs, Variant variant = Variant::plain);

  const Square& grid() const { return grid_; }
  Variant variant() const { return variant_; }
  std::int64_t total_error() const { return total_; }
  ErrorReport error_report() const;
  std::int64_t variant_penalty() const { return variant_penalty_; }

  std::int64_t row_sum(std::size_t r) const { return row_sum_[r]; }
  std::int64_t col_sum(std::size_t c) const { return col_sum_[c]; }
  std::int64_t value_count(Entry v) const;
  std::int64_t border_value_count(Entry v) const;

  /// Writes new_value at (r, c), updates every affected contribution, and
  /// returns the change in total error. O(1): affected tuples are found
  /// through per-value terminal masks, not scans.
  std::int64_t apply_delta(std::size_t r, std::size_t c, Entry new_value);

  /// Total error the grid would have after writing new_value at (r, c),
  /// without committing anything.
  std::int64_t probe(std::size_t r, std::size_t c, Entry new_value);

  /// Rebuilds all bookkeeping for a new grid of the same order.
  void reset(const Square& grid);

  std::uint64_t iterations = 0;  // bumped once per solver iteration

 private:
  void rebuild();
  std::int64_t compute_variant_penalty() const;
  std::size_t index_of(Entry v) const;

  Square grid_;
  Entry bound_;
  Variant variant_;
  std::size_t n_;

  std::vector<std::int64_t> row_sum_, col_sum_;
  std::vector<std::int32_t> count_, border_count_, interior_count_;
  // Bit i set when tuple i's terminal cell holds the value; orders above 32
  // are rejected at construction.
  std::vector<std::uint32_t> terminal_rows_, terminal_cols_;
  std::int64_t distinct_border_ = 0;
  std::int64_t border_dup_errors_ = 0;
  std::int64_t coverage_errors_ = 0;
  std::vector<char> row_ok_, col_ok_;
  std::int64_t row_errors_ = 0, col_errors_ = 0;
  std::int64_t main_diag_sum_ = 0, co_diag_sum_ = 0;
  std::int64_t variant_penalty_ = 0;
  std::int64_t total_ = 0;
};

std::int64_t apply_delta(SearchState& state, std::size_t r, std::size_t c,
                         Entry new_value);

/// Uniformly random square with every cell in [-max_abs, +max_abs].
Square initialize(std::size_t order, Entry max_abs, Rng& rng);

/// k independent single-cell replacements with uniform cell and value draws;
/// cells may repeat.
Square mutate(const Square& square, int k, Entry max_abs, Rng& rng);

/// One full sweep: every cell in row-major order, every value ascending in
/// [-max_abs, +max_abs]; an assignment is kept only when it strictly lowers
/// the total error. Never increases the error; a zero-error state is fixed.
void optimize(SearchState& state, Entry max_abs);

struct SearchOutcome {
  std::optional<Square> solution;
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
  std::chrono::duration<double> elapsed{0};
  std::int64_t best_error = 0;
};

/// How solve evaluates candidate errors. Both modes make identical decisions;
/// scratch recomputes count_errors + variant_errors from the grid each time
/// and exists as the slow reference for the incremental path.
enum class EvalMode { incremental, scratch };

using ProgressFn =
    std::function<void(std::uint64_t iteration, std::int64_t best_error)>;

/// Hill climbing: mutate the best square, sweep-optimize, accept on strict
/// improvement, restart after restart_interval non-improving iterations.
/// Returns when the error reaches 0 or max_iterations is exhausted.
SearchOutcome solve(const SearchConfig& config,
                    EvalMode mode = EvalMode::incremental,
                    const ProgressFn& progress = {});

}  // namespace sdsq
