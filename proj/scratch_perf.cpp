#include <chrono>
#include <iostream>

#include "sdsq/search.hpp"
#include "sdsq/verify.hpp"

using namespace sdsq;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  const std::size_t order = argc > 1 ? std::stoul(argv[1]) : 4;
  const Entry max_abs = argc > 2 ? std::stoll(argv[2]) : 4;
  const int runs = argc > 3 ? std::stoi(argv[3]) : 5;

  for (int i = 0; i < runs; ++i) {
    SearchConfig config;
    config.order = order;
    config.max_abs = max_abs;
    config.rng_seed = 1000 + i;
    auto t0 = Clock::now();
    const SearchOutcome out = solve(config);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << "seed " << config.rng_seed << ": "
              << (out.solution ? "solved" : "no solution") << " iters "
              << out.iterations << " restarts " << out.restarts << " in " << secs
              << "s  (" << out.iterations / std::max(secs, 1e-9) << " it/s)\n";
  }

  // raw apply_delta throughput
  Rng rng(1);
  SearchState state(initialize(6, 5, rng), 5);
  auto t0 = Clock::now();
  std::int64_t sink = 0;
  constexpr int kEdits = 2'000'000;
  for (int i = 0; i < kEdits; ++i)
    sink += state.apply_delta(rng.below(6), rng.below(6), rng.value_in_band(5));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << "apply_delta: " << kEdits / secs / 1e6 << " M edits/s (sink " << sink
            << ")\n";
  return 0;
}
