#include <chrono>
#include <iostream>

#include "sdsq/search.hpp"

using namespace sdsq;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  const std::size_t order = argc > 1 ? std::stoul(argv[1]) : 5;
  const Entry max_abs = argc > 2 ? std::stoll(argv[2]) : 4;
  const int runs = argc > 3 ? std::stoi(argv[3]) : 6;

  for (std::uint64_t interval : {10'000ull, 30'000ull, 100'000ull}) {
    double total = 0;
    for (int i = 0; i < runs; ++i) {
      SearchConfig config;
      config.order = order;
      config.max_abs = max_abs;
      config.rng_seed = 5000 + i;
      config.restart_interval = interval;
      auto t0 = Clock::now();
      const SearchOutcome out = solve(config);
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      total += secs;
      std::cout << "interval " << interval << " seed " << config.rng_seed << ": "
                << (out.solution ? "ok" : "FAIL") << " " << secs << "s\n";
    }
    std::cout << "interval " << interval << " mean " << total / runs << "s\n";
  }
  return 0;
}
