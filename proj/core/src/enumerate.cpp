#include "sdsq/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sdsq/canon.hpp"
#include "sdsq/verify.hpp"

namespace sdsq {

namespace {

/// Backtracking over cells in border-first order: bottom row left to right,
/// right column top to bottom, then the (n-1)^2 interior cells row-major.
/// Frequencies are pinned the moment a tuple completes, so every branch that
/// cannot balance its value budget dies early.
class Enumerator {
 public:
  explicit Enumerator(const EnumConfig& config)
      : n_(config.order),
        max_abs_(config.max_abs),
        nontrivial_(!config.include_trivial),
        total_cells_(n_ * n_),
        grid_(n_),
        slots_(static_cast<std::size_t>(2 * config.max_abs + 1)),
        count_(slots_, 0),
        border_used_(slots_, 0),
        pinned_(slots_, 0),
        required_(slots_, 0),
        row_part_(n_, 0),
        col_part_(n_, 0) {}

  std::vector<Square> run() {
    results_.clear();
    remaining_ = static_cast<std::int64_t>(total_cells_);
    place_border(0);
    return std::move(results_);
  }

 private:
  std::size_t index_of(Entry v) const { return static_cast<std::size_t>(v + max_abs_); }

  bool pin(Entry v, std::int64_t req) {
    if (req < 1 || req > static_cast<std::int64_t>(total_cells_)) return false;
    const std::size_t i = index_of(v);
    if (pinned_[i]) return required_[i] == req;
    if (count_[i] > req) return false;
    if (req - count_[i] > remaining_) return false;
    pinned_[i] = 1;
    required_[i] = req;
    deficit_ += req - count_[i];
    if (deficit_ > remaining_) {
      unpin(v);
      return false;
    }
    pin_trail_.push_back(v);
    return true;
  }

  void unpin(Entry v) {
    const std::size_t i = index_of(v);
    deficit_ -= required_[i] - count_[i];
    pinned_[i] = 0;
  }

  void unpin_to(std::size_t mark) {
    while (pin_trail_.size() > mark) {
      unpin(pin_trail_.back());
      pin_trail_.pop_back();
    }
  }

  bool place(std::size_t r, std::size_t c, Entry v) {
    const std::size_t i = index_of(v);
    if (pinned_[i]) {
      if (count_[i] + 1 > required_[i]) return false;
    } else {
      // An unpinned value consumes a cell without shrinking the deficit.
      if (deficit_ > remaining_ - 1) return false;
    }
    ++count_[i];
    if (pinned_[i]) --deficit_;
    --remaining_;
    grid_(r, c) = v;
    row_part_[r] += v;
    col_part_[c] += v;
    return true;
  }

  /// Exact inverse of a successful place(); unpin first when both apply.
  void unplace(std::size_t r, std::size_t c, Entry v) {
    const std::size_t i = index_of(v);
    --count_[i];
    if (pinned_[i]) ++deficit_;
    ++remaining_;
    row_part_[r] -= v;
    col_part_[c] -= v;
  }

  // Border cell k: k < n_ is bottom row (n-1, k); otherwise right column
  // (k - n_, n-1).
  void place_border(std::size_t k) {
    if (k == 2 * n_ - 1) {
      if (col_part_[n_ - 1] != row_part_[n_ - 1]) return;
      const std::size_t mark = pin_trail_.size();
      if (pin(grid_(n_ - 1, n_ - 1), row_part_[n_ - 1])) {
        prepare_interior_domain();
        place_interior(0, 0);
      }
      unpin_to(mark);
      return;
    }

    const bool bottom = k < n_;
    const std::size_t r = bottom ? n_ - 1 : k - n_;
    const std::size_t c = bottom ? k : n_ - 1;
    for (Entry v = -max_abs_; v <= max_abs_; ++v) {
      const std::size_t i = index_of(v);
      if (nontrivial_ && border_used_[i]) continue;
      if (!place(r, c, v)) continue;
      border_used_[i] += 1;

      bool viable = true;
      if (k == n_ - 1) {  // bottom row complete; its sum is freq(corner)
        const std::int64_t sum = row_part_[n_ - 1];
        if (sum < 1 || sum > static_cast<std::int64_t>(total_cells_)) viable = false;
        // Parity: a nontrivial square's corner sum matches n mod 2.
        if (viable && nontrivial_ &&
            (sum - static_cast<std::int64_t>(n_)) % 2 != 0)
          viable = false;
      }
      if (viable) place_border(k + 1);

      border_used_[i] -= 1;
      unplace(r, c, v);
    }
  }

  bool row_bounds_ok(std::size_t r, std::size_t c) const {
    const std::int64_t rem = static_cast<std::int64_t>(n_ - 2 - c);
    const std::int64_t low = row_part_[r] + rem * domain_min_;
    const std::int64_t high = row_part_[r] + rem * domain_max_;
    if (high < 1 || low > static_cast<std::int64_t>(total_cells_)) return false;
    // The row's eventual sum pins its terminal's frequency, which can only
    // have grown by then.
    return high >= count_[index_of(grid_(r, n_ - 1))];
  }

  bool col_bounds_ok(std::size_t r, std::size_t c) const {
    const std::int64_t rem = static_cast<std::int64_t>(n_ - 2 - r);
    const std::int64_t low = col_part_[c] + rem * domain_min_;
    const std::int64_t high = col_part_[c] + rem * domain_max_;
    if (high < 1 || low > static_cast<std::int64_t>(total_cells_)) return false;
    return high >= count_[index_of(grid_(n_ - 1, c))];
  }

  void place_interior(std::size_t r, std::size_t c) {
    if (r == n_ - 1 || n_ == 1) {
      emit();
      return;
    }

    const auto try_value = [&](Entry v) {
      if (!place(r, c, v)) return;
      const std::size_t mark = pin_trail_.size();
      bool viable = row_bounds_ok(r, c) && col_bounds_ok(r, c);
      if (viable && c == n_ - 2)
        viable = pin(grid_(r, n_ - 1), row_part_[r]);
      if (viable && r == n_ - 2)
        viable = pin(grid_(n_ - 1, c), col_part_[c]);
      if (viable) {
        if (c == n_ - 2)
          place_interior(r + 1, 0);
        else
          place_interior(r, c + 1);
      }
      unpin_to(mark);
      unplace(r, c, v);
    };

    if (nontrivial_) {
      for (Entry v : border_values_) try_value(v);
    } else {
      for (Entry v = -max_abs_; v <= max_abs_; ++v) try_value(v);
    }
  }

  void emit() {
    if (deficit_ != 0) return;
    const ErrorReport report = count_errors(grid_);
    const bool ok = nontrivial_ ? report.total() == 0
                                : report.row_errors == 0 && report.col_errors == 0;
    if (!ok)
      throw std::logic_error("enumerator emitted a square failing verification");
    results_.push_back(grid_);
  }

  void prepare_interior_domain() {
    border_values_.clear();
    for (Entry v = -max_abs_; v <= max_abs_; ++v)
      if (border_used_[index_of(v)] > 0) border_values_.push_back(v);
    domain_min_ = nontrivial_ ? border_values_.front() : -max_abs_;
    domain_max_ = nontrivial_ ? border_values_.back() : max_abs_;
  }
  std::size_t n_;
  Entry max_abs_;
  bool nontrivial_;
  std::size_t total_cells_;
  Square grid_;
  std::size_t slots_;
  std::vector<std::int32_t> count_, border_used_, pinned_;
  std::vector<std::int64_t> required_;
  std::vector<std::int64_t> row_part_, col_part_;
  std::int64_t deficit_ = 0;
  std::int64_t remaining_ = 0;
  std::vector<Entry> pin_trail_;
  std::vector<Entry> border_values_;
  Entry domain_min_ = 0, domain_max_ = 0;
  std::vector<Square> results_;
};

/// Lexicographically smallest image under the transformation group; the
/// class representative for trivial squares, where SNF is undefined.
Square orbit_min(const Square& square) {
  const std::size_t n = square.order();
  std::vector<std::size_t> identity(n - 1);
  std::iota(identity.begin(), identity.end(), 0);

  Square best = square;
  std::vector<std::size_t> row_perm = identity;
  do {
    const Square rows_done = permute_rows(square, row_perm);
    std::vector<std::size_t> col_perm = identity;
    do {
      const Square image = permute_cols(rows_done, col_perm);
      if (image < best) best = image;
      const Square mirrored = reflect(image);
      if (mirrored < best) best = mirrored;
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));
  return best;
}

}  // namespace

std::vector<Square> enumerate_all(const EnumConfig& config) {
  if (config.order < 1) throw std::invalid_argument("order must be >= 1");
  if (config.max_abs < 1) throw std::invalid_argument("max_abs must be >= 1");
  if (config.order > config.order_guard)
    throw std::invalid_argument(
        "order " + std::to_string(config.order) +
        " exceeds the enumeration guard; raise order_guard to proceed");

  Enumerator enumerator(config);
  std::vector<Square> raw = enumerator.run();

  if (config.dedupe == Dedupe::raw) {
    std::sort(raw.begin(), raw.end());
    return raw;
  }

  std::map<Square, Square> by_representative;  // canonical key -> representative
  for (const Square& square : raw) {
    if (is_nontrivial(square)) {
      Square snf = to_snf(square);
      by_representative.emplace(snf, snf);
    } else {
      Square canonical = orbit_min(square);
      by_representative.emplace(canonical, canonical);
    }
  }
  std::vector<Square> out;
  out.reserve(by_representative.size());
  for (auto& [key, representative] : by_representative)
    out.push_back(representative);
  return out;
}

bool check_three_by_three_bound(std::span<const Square> results) {
  for (const Square& square : results) {
    const Entry corner_sum = row_sum(square, square.order() - 1);
    if (corner_sum != 1 && corner_sum != 3) return false;
  }
  return true;
}

VariantCounts count_by_variant(std::span<const Square> results) {
  VariantCounts counts;
  for (const Square& square : results) {
    if (!is_nontrivial(square)) continue;
    ++counts.self_descriptive;
    const bool minimal = is_minimal(square);
    const bool magic = is_magic(square).magic;
    counts.minimal += minimal;
    counts.magic += magic;
    counts.minimal_magic += minimal && magic;
    counts.perfect += is_perfect(square);
    counts.concentric += is_concentric(square);
  }
  return counts;
}

}  // namespace sdsq
