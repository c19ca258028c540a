#pragma once

#include <cstddef>
#include <vector>

namespace opensos::detail {

// Calls `emit` once per element of the cartesian product of index ranges
// [0, sizes[k]), in lexicographic order. Nothing is emitted when any range
// is empty; exactly once when `sizes` is empty.
template <class Emit>
void for_each_choice(const std::vector<std::size_t>& sizes, Emit&& emit) {
  for (auto n : sizes) {
    if (n == 0) return;
  }
  std::vector<std::size_t> pick(sizes.size(), 0);
  for (;;) {
    emit(pick);
    std::size_t i = sizes.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++pick[i] < sizes[i]) break;
      pick[i] = 0;
    }
  }
}

}  // namespace opensos::detail
