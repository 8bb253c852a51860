#pragma once

#include <vector>

#include "sdsq/search.hpp"
#include "sdsq/square.hpp"

namespace sdsq::test {

inline Square random_square(std::size_t order, Entry max_abs, Rng& rng) {
  return initialize(order, max_abs, rng);
}

inline std::vector<std::size_t> perm(std::initializer_list<std::size_t> indices) {
  return {indices};
}

}  // namespace sdsq::test
