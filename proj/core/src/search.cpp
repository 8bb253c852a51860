#include "sdsq/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace sdsq {

namespace {

std::int64_t freq_of(const FrequencyTable& table, Entry v) {
  auto it = table.find(v);
  return it == table.end() ? 0 : it->second;
}

std::int64_t magic_penalty(const Square& square, const FrequencyTable& freq) {
  const std::size_t n = square.order();
  std::int64_t main_sum = 0, co_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    main_sum += square(i, i);
    co_sum += square(i, n - 1 - i);
  }
  std::int64_t penalty = 0;
  if (main_sum != freq_of(freq, square(0, 0)) &&
      main_sum != freq_of(freq, square(n - 1, n - 1)))
    ++penalty;
  if (co_sum != freq_of(freq, square(0, n - 1)) &&
      co_sum != freq_of(freq, square(n - 1, 0)))
    ++penalty;
  return penalty;
}

std::int64_t bidirectional_penalty(const Square& square, const FrequencyTable& freq) {
  const std::size_t n = square.order();
  std::int64_t penalty = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const Entry sum = row_sum(square, r);
    if (freq_of(freq, square(r, 0)) != sum || freq_of(freq, square(r, n - 1)) != sum)
      ++penalty;
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Entry sum = col_sum(square, c);
    if (freq_of(freq, square(0, c)) != sum || freq_of(freq, square(n - 1, c)) != sum)
      ++penalty;
  }
  return penalty;
}

std::int64_t diagonal_endpoint_penalty(const Square& square,
                                       const FrequencyTable& freq) {
  const std::size_t n = square.order();
  std::int64_t main_sum = 0, co_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    main_sum += square(i, i);
    co_sum += square(i, n - 1 - i);
  }
  std::int64_t penalty = 0;
  penalty += main_sum != freq_of(freq, square(0, 0));
  penalty += main_sum != freq_of(freq, square(n - 1, n - 1));
  penalty += co_sum != freq_of(freq, square(0, n - 1));
  penalty += co_sum != freq_of(freq, square(n - 1, 0));
  return penalty;
}

std::int64_t minimal_penalty(const Square& square, const FrequencyTable& freq) {
  const std::int64_t n = static_cast<std::int64_t>(square.order());
  std::int64_t penalty = 0;
  std::int64_t in_range = 0;
  for (Entry v = 1 - n; v <= n - 1; ++v) {
    const std::int64_t count = freq_of(freq, v);
    if (count == 0) ++penalty;
    in_range += count;
  }
  return penalty + (n * n - in_range);
}

}  // namespace

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::plain: return "plain";
    case Variant::magic: return "magic";
    case Variant::bidirectional: return "bidirectional";
    case Variant::perfect: return "perfect";
    case Variant::minimal: return "minimal";
    case Variant::concentric: return "concentric";
  }
  return "plain";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::plain, Variant::magic, Variant::bidirectional,
                    Variant::perfect, Variant::minimal, Variant::concentric})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

std::int64_t variant_errors(const Square& square, Variant variant) {
  if (variant == Variant::plain) return 0;
  if (variant == Variant::concentric)
    return square.order() < 3 ? 0 : count_errors(core_of(square)).total();

  const FrequencyTable freq = frequencies(square);
  switch (variant) {
    case Variant::magic:
      return magic_penalty(square, freq);
    case Variant::bidirectional:
      return bidirectional_penalty(square, freq);
    case Variant::perfect:
      return magic_penalty(square, freq) + bidirectional_penalty(square, freq) +
             diagonal_endpoint_penalty(square, freq);
    case Variant::minimal:
      return minimal_penalty(square, freq);
    default:
      return 0;
  }
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("rng bound must be >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw < threshold);
  return draw % bound;
}

Entry Rng::value_in_band(Entry max_abs) {
  return -max_abs + static_cast<Entry>(below(2 * static_cast<std::uint64_t>(max_abs) + 1));
}

void SearchConfig::validate() const {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (max_abs < 1) throw std::invalid_argument("max_abs must be >= 1");
  if (mutations_per_iteration < 1)
    throw std::invalid_argument("mutations_per_iteration must be >= 1");
  if (variant == Variant::concentric && order < 3)
    throw std::invalid_argument("concentric search requires order >= 3");
}

SearchState::SearchState(Square grid, Entry max_abs, Variant variant)
    : grid_(std::move(grid)), bound_(max_abs), variant_(variant),
      n_(grid_.order()) {
  if (max_abs < 1) throw std::invalid_argument("max_abs must be >= 1");
  if (n_ > 32)
    throw std::invalid_argument("search state supports orders up to 32");
  for (Entry v : grid_.cells()) bound_ = std::max(bound_, v < 0 ? -v : v);
  rebuild();
}

std::size_t SearchState::index_of(Entry v) const {
  return static_cast<std::size_t>(v + bound_);
}

std::int64_t SearchState::value_count(Entry v) const {
  if (v < -bound_ || v > bound_) return 0;
  return count_[index_of(v)];
}

std::int64_t SearchState::border_value_count(Entry v) const {
  if (v < -bound_ || v > bound_) return 0;
  return border_count_[index_of(v)];
}

void SearchState::rebuild() {
  const std::size_t slots = static_cast<std::size_t>(2 * bound_ + 1);
  row_sum_.assign(n_, 0);
  col_sum_.assign(n_, 0);
  count_.assign(slots, 0);
  border_count_.assign(slots, 0);
  interior_count_.assign(slots, 0);
  terminal_rows_.assign(slots, 0);
  terminal_cols_.assign(slots, 0);
  row_ok_.assign(n_, 0);
  col_ok_.assign(n_, 0);
  main_diag_sum_ = co_diag_sum_ = 0;

  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      const Entry v = grid_(r, c);
      row_sum_[r] += v;
      col_sum_[c] += v;
      ++count_[index_of(v)];
      if (is_border_cell(n_, r, c))
        ++border_count_[index_of(v)];
      else
        ++interior_count_[index_of(v)];
      if (r == c) main_diag_sum_ += v;
      if (r + c == n_ - 1) co_diag_sum_ += v;
    }
  }
  for (std::size_t r = 0; r < n_; ++r)
    terminal_rows_[index_of(grid_(r, n_ - 1))] |= 1u << r;
  for (std::size_t c = 0; c < n_; ++c)
    terminal_cols_[index_of(grid_(n_ - 1, c))] |= 1u << c;

  distinct_border_ = 0;
  for (std::size_t i = 0; i < slots; ++i)
    if (border_count_[i] > 0) ++distinct_border_;
  border_dup_errors_ = static_cast<std::int64_t>(2 * n_ - 1) - distinct_border_;

  coverage_errors_ = 0;
  for (std::size_t r = 0; r + 1 < n_; ++r)
    for (std::size_t c = 0; c + 1 < n_; ++c)
      if (border_count_[index_of(grid_(r, c))] == 0) ++coverage_errors_;

  row_errors_ = col_errors_ = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    row_ok_[r] = row_sum_[r] == count_[index_of(grid_(r, n_ - 1))];
    if (!row_ok_[r]) ++row_errors_;
  }
  for (std::size_t c = 0; c < n_; ++c) {
    col_ok_[c] = col_sum_[c] == count_[index_of(grid_(n_ - 1, c))];
    if (!col_ok_[c]) ++col_errors_;
  }

  variant_penalty_ = variant_ == Variant::plain ? 0 : compute_variant_penalty();
  total_ = border_dup_errors_ + coverage_errors_ + row_errors_ + col_errors_ +
           variant_penalty_;
}

void SearchState::reset(const Square& grid) {
  if (grid.order() != n_)
    throw std::invalid_argument("reset requires a grid of the same order");
  grid_ = grid;
  Entry bound = bound_;
  for (Entry v : grid_.cells()) bound = std::max(bound, v < 0 ? -v : v);
  bound_ = bound;
  rebuild();
}

ErrorReport SearchState::error_report() const {
  return ErrorReport{border_dup_errors_, coverage_errors_, row_errors_, col_errors_};
}

std::int64_t SearchState::compute_variant_penalty() const {
  switch (variant_) {
    case Variant::plain:
      return 0;
    case Variant::magic:
    case Variant::perfect: {
      std::int64_t penalty = 0;
      const bool main_tl = main_diag_sum_ == value_count(grid_(0, 0));
      const bool main_br = main_diag_sum_ == value_count(grid_(n_ - 1, n_ - 1));
      const bool co_tr = co_diag_sum_ == value_count(grid_(0, n_ - 1));
      const bool co_bl = co_diag_sum_ == value_count(grid_(n_ - 1, 0));
      penalty += !(main_tl || main_br);
      penalty += !(co_tr || co_bl);
      if (variant_ == Variant::magic) return penalty;
      penalty += !main_tl;
      penalty += !main_br;
      penalty += !co_tr;
      penalty += !co_bl;
      for (std::size_t r = 0; r < n_; ++r)
        if (value_count(grid_(r, 0)) != row_sum_[r] ||
            value_count(grid_(r, n_ - 1)) != row_sum_[r])
          ++penalty;
      for (std::size_t c = 0; c < n_; ++c)
        if (value_count(grid_(0, c)) != col_sum_[c] ||
            value_count(grid_(n_ - 1, c)) != col_sum_[c])
          ++penalty;
      return penalty;
    }
    case Variant::bidirectional: {
      std::int64_t penalty = 0;
      for (std::size_t r = 0; r < n_; ++r)
        if (value_count(grid_(r, 0)) != row_sum_[r] ||
            value_count(grid_(r, n_ - 1)) != row_sum_[r])
          ++penalty;
      for (std::size_t c = 0; c < n_; ++c)
        if (value_count(grid_(0, c)) != col_sum_[c] ||
            value_count(grid_(n_ - 1, c)) != col_sum_[c])
          ++penalty;
      return penalty;
    }
    case Variant::minimal: {
      const std::int64_t n = static_cast<std::int64_t>(n_);
      std::int64_t penalty = 0, in_range = 0;
      for (Entry v = 1 - n; v <= n - 1; ++v) {
        const std::int64_t count = value_count(v);
        if (count == 0) ++penalty;
        in_range += count;
      }
      return penalty + (n * n - in_range);
    }
    case Variant::concentric:
      return n_ < 3 ? 0 : count_errors(core_of(grid_)).total();
  }
  return 0;
}

std::int64_t SearchState::apply_delta(std::size_t r, std::size_t c, Entry new_value) {
  if (r >= n_ || c >= n_) throw std::out_of_range("cell index out of range");
  if (new_value < -bound_ || new_value > bound_)
    throw std::out_of_range("value outside the state's tracked band");

  const Entry old_value = grid_(r, c);
  if (old_value == new_value) return 0;
  const std::int64_t old_total = total_;

  const std::size_t i0 = index_of(old_value);
  const std::size_t i1 = index_of(new_value);

  // Tuples needing re-evaluation: the edited row and column, plus every tuple
  // whose terminal value is the old or new value (its frequency changes).
  const std::uint32_t rows = terminal_rows_[i0] | terminal_rows_[i1] | (1u << r);
  const std::uint32_t cols = terminal_cols_[i0] | terminal_cols_[i1] | (1u << c);

  for (std::uint32_t m = rows; m; m &= m - 1)
    row_errors_ -= !row_ok_[std::countr_zero(m)];
  for (std::uint32_t m = cols; m; m &= m - 1)
    col_errors_ -= !col_ok_[std::countr_zero(m)];

  const Entry delta = new_value - old_value;
  grid_(r, c) = new_value;
  row_sum_[r] += delta;
  col_sum_[c] += delta;
  --count_[i0];
  ++count_[i1];
  if (r == c) main_diag_sum_ += delta;
  if (r + c == n_ - 1) co_diag_sum_ += delta;
  if (c == n_ - 1) {
    terminal_rows_[i0] &= ~(1u << r);
    terminal_rows_[i1] |= 1u << r;
  }
  if (r == n_ - 1) {
    terminal_cols_[i0] &= ~(1u << c);
    terminal_cols_[i1] |= 1u << c;
  }

  if (is_border_cell(n_, r, c)) {
    if (--border_count_[i0] == 0) {
      --distinct_border_;
      coverage_errors_ += interior_count_[i0];
    }
    if (++border_count_[i1] == 1) {
      ++distinct_border_;
      coverage_errors_ -= interior_count_[i1];
    }
    border_dup_errors_ = static_cast<std::int64_t>(2 * n_ - 1) - distinct_border_;
  } else {
    if (border_count_[i0] == 0) --coverage_errors_;
    --interior_count_[i0];
    ++interior_count_[i1];
    if (border_count_[i1] == 0) ++coverage_errors_;
  }

  for (std::uint32_t m = rows; m; m &= m - 1) {
    const std::size_t i = std::countr_zero(m);
    row_ok_[i] = row_sum_[i] == count_[index_of(grid_(i, n_ - 1))];
    row_errors_ += !row_ok_[i];
  }
  for (std::uint32_t m = cols; m; m &= m - 1) {
    const std::size_t j = std::countr_zero(m);
    col_ok_[j] = col_sum_[j] == count_[index_of(grid_(n_ - 1, j))];
    col_errors_ += !col_ok_[j];
  }

  if (variant_ != Variant::plain) variant_penalty_ = compute_variant_penalty();
  total_ = border_dup_errors_ + coverage_errors_ + row_errors_ + col_errors_ +
           variant_penalty_;
  return total_ - old_total;
}

std::int64_t SearchState::probe(std::size_t r, std::size_t c, Entry new_value) {
  if (r >= n_ || c >= n_) throw std::out_of_range("cell index out of range");
  if (new_value < -bound_ || new_value > bound_)
    throw std::out_of_range("value outside the state's tracked band");

  const Entry old_value = grid_(r, c);
  if (old_value == new_value) return total_;

  // Variant penalties are recomputed from full state; fall back to a real
  // edit plus its exact inverse.
  if (variant_ != Variant::plain) {
    apply_delta(r, c, new_value);
    const std::int64_t result = total_;
    apply_delta(r, c, old_value);
    return result;
  }

  const std::size_t i0 = index_of(old_value);
  const std::size_t i1 = index_of(new_value);
  const Entry delta = new_value - old_value;

  std::int64_t border_dup = border_dup_errors_;
  std::int64_t coverage = coverage_errors_;
  if (is_border_cell(n_, r, c)) {
    std::int64_t distinct = distinct_border_;
    if (border_count_[i0] == 1) {
      --distinct;
      coverage += interior_count_[i0];
    }
    if (border_count_[i1] == 0) {
      ++distinct;
      coverage -= interior_count_[i1];
    }
    border_dup = static_cast<std::int64_t>(2 * n_ - 1) - distinct;
  } else {
    coverage -= border_count_[i0] == 0;
    coverage += border_count_[i1] == 0;
  }

  const std::uint32_t rows = terminal_rows_[i0] | terminal_rows_[i1] | (1u << r);
  const std::uint32_t cols = terminal_cols_[i0] | terminal_cols_[i1] | (1u << c);

  std::int64_t row_errors = row_errors_;
  for (std::uint32_t m = rows; m; m &= m - 1) {
    const std::size_t i = std::countr_zero(m);
    row_errors -= !row_ok_[i];
    const std::int64_t sum = row_sum_[i] + (i == r ? delta : 0);
    const Entry terminal =
        (i == r && c == n_ - 1) ? new_value : grid_(i, n_ - 1);
    std::int64_t count = count_[index_of(terminal)];
    count += terminal == new_value;
    count -= terminal == old_value;
    row_errors += sum != count;
  }
  std::int64_t col_errors = col_errors_;
  for (std::uint32_t m = cols; m; m &= m - 1) {
    const std::size_t j = std::countr_zero(m);
    col_errors -= !col_ok_[j];
    const std::int64_t sum = col_sum_[j] + (j == c ? delta : 0);
    const Entry terminal =
        (j == c && r == n_ - 1) ? new_value : grid_(n_ - 1, j);
    std::int64_t count = count_[index_of(terminal)];
    count += terminal == new_value;
    count -= terminal == old_value;
    col_errors += sum != count;
  }

  return border_dup + coverage + row_errors + col_errors;
}

std::int64_t apply_delta(SearchState& state, std::size_t r, std::size_t c,
                         Entry new_value) {
  return state.apply_delta(r, c, new_value);
}

Square initialize(std::size_t order, Entry max_abs, Rng& rng) {
  Square square(order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c)
      square(r, c) = rng.value_in_band(max_abs);
  return square;
}

Square mutate(const Square& square, int k, Entry max_abs, Rng& rng) {
  if (k < 1) throw std::invalid_argument("mutation count must be >= 1");
  const std::size_t n = square.order();
  Square out = square;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t cell = rng.below(n * n);
    out(cell / n, cell % n) = rng.value_in_band(max_abs);
  }
  return out;
}

namespace {

struct Change {
  std::size_t r, c;
  Entry old_value;
};

/// One optimize pass over an evaluator: candidates are probed without
/// committing and kept only on strict improvement; accepted changes are
/// journaled.
template <class Eval>
void sweep(Eval& eval, std::size_t n, Entry max_abs, std::vector<Change>* journal) {
  std::int64_t best = eval.error();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (Entry m = -max_abs; m <= max_abs; ++m) {
        const Entry old_value = eval.get(r, c);
        if (m == old_value) continue;
        const std::int64_t e = eval.probe(r, c, m);
        if (e < best) {
          best = e;
          eval.set(r, c, m);
          if (journal) journal->push_back({r, c, old_value});
        }
      }
    }
  }
}

struct IncrementalEval {
  SearchState state;

  IncrementalEval(const Square& square, Entry max_abs, Variant variant)
      : state(square, max_abs, variant) {}

  std::int64_t error() const { return state.total_error(); }
  Entry get(std::size_t r, std::size_t c) const { return state.grid()(r, c); }
  std::int64_t probe(std::size_t r, std::size_t c, Entry v) {
    return state.probe(r, c, v);
  }
  std::int64_t set(std::size_t r, std::size_t c, Entry v) {
    state.apply_delta(r, c, v);
    return state.total_error();
  }
  const Square& grid() const { return state.grid(); }
  void reset(const Square& square) { state.reset(square); }
  void note_iteration() { ++state.iterations; }
};

/// Reference evaluator: recomputes the objective from the grid every time.
struct ScratchEval {
  Square working;
  Variant variant;
  std::int64_t cached;

  ScratchEval(const Square& square, Entry, Variant v)
      : working(square), variant(v), cached(recompute()) {}

  std::int64_t recompute() const {
    return count_errors(working).total() + variant_errors(working, variant);
  }
  std::int64_t error() const { return cached; }
  Entry get(std::size_t r, std::size_t c) const { return working(r, c); }
  std::int64_t probe(std::size_t r, std::size_t c, Entry v) {
    const Entry old_value = working(r, c);
    working(r, c) = v;
    const std::int64_t e = recompute();
    working(r, c) = old_value;
    return e;
  }
  std::int64_t set(std::size_t r, std::size_t c, Entry v) {
    working(r, c) = v;
    cached = recompute();
    return cached;
  }
  const Square& grid() const { return working; }
  void reset(const Square& square) {
    working = square;
    cached = recompute();
  }
  void note_iteration() {}
};

template <class Eval>
SearchOutcome solve_impl(const SearchConfig& config, const ProgressFn& progress) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.rng_seed);
  const std::size_t n = config.order;

  Square best_square = initialize(n, config.max_abs, rng);
  Eval eval(best_square, config.max_abs, config.variant);

  constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();
  std::int64_t best_errors = kInfinity;
  std::int64_t global_best = kInfinity;

  SearchOutcome outcome;
  std::vector<Change> journal;
  std::uint64_t stall = 0;

  for (std::uint64_t iteration = 1;
       config.max_iterations == 0 || iteration <= config.max_iterations;
       ++iteration) {
    outcome.iterations = iteration;
    eval.note_iteration();
    journal.clear();

    for (int k = 0; k < config.mutations_per_iteration; ++k) {
      const std::uint64_t cell = rng.below(n * n);
      const Entry value = rng.value_in_band(config.max_abs);
      const std::size_t r = cell / n, c = cell % n;
      journal.push_back({r, c, eval.get(r, c)});
      eval.set(r, c, value);
    }

    sweep(eval, n, config.max_abs, &journal);

    const std::int64_t e = eval.error();
    if (e < best_errors) {
      best_errors = e;
      best_square = eval.grid();
      stall = 0;
    } else {
      for (auto it = journal.rbegin(); it != journal.rend(); ++it)
        eval.set(it->r, it->c, it->old_value);
      ++stall;
    }
    global_best = std::min(global_best, best_errors);
    if (progress) progress(iteration, best_errors);

    if (best_errors == 0) {
      outcome.solution = best_square;
      break;
    }
    if (config.restart_interval != 0 && stall >= config.restart_interval) {
      best_square = initialize(n, config.max_abs, rng);
      eval.reset(best_square);
      best_errors = kInfinity;
      stall = 0;
      ++outcome.restarts;
    }
  }

  outcome.best_error = global_best == kInfinity ? 0 : global_best;
  outcome.elapsed = std::chrono::steady_clock::now() - start;
  return outcome;
}

}  // namespace

void optimize(SearchState& state, Entry max_abs) {
  struct StateRef {
    SearchState& state;
    std::int64_t error() const { return state.total_error(); }
    Entry get(std::size_t r, std::size_t c) const { return state.grid()(r, c); }
    std::int64_t probe(std::size_t r, std::size_t c, Entry v) {
      return state.probe(r, c, v);
    }
    std::int64_t set(std::size_t r, std::size_t c, Entry v) {
      state.apply_delta(r, c, v);
      return state.total_error();
    }
  } ref{state};
  sweep(ref, state.grid().order(), max_abs, static_cast<std::vector<Change>*>(nullptr));
}

SearchOutcome solve(const SearchConfig& config, EvalMode mode,
                    const ProgressFn& progress) {
  config.validate();
  if (mode == EvalMode::scratch) return solve_impl<ScratchEval>(config, progress);
  return solve_impl<IncrementalEval>(config, progress);
}

}  // namespace sdsq
