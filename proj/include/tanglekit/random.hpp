#pragma once

// Pseudo-random twist vectors for property checks and oracle sweeps.

#include <random>

#include "tanglekit/fractions.hpp"

namespace tanglekit {

struct TwistVectorSampler {
  int max_length = 9;
  int max_abs = 5;
  int max_crossings = -1;  // negative: unbounded

  // Interior entries are drawn nonzero; resampled until within budget.
  TwistVector operator()(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> len(1, max_length);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    while (true) {
      const int m = len(rng);
      std::vector<std::int64_t> e(m);
      for (int k = 0; k < m; ++k) {
        do e[k] = entry(rng);
        while (e[k] == 0 && k > 0 && k + 1 < m);
      }
      TwistVector tv(std::move(e));
      if (max_crossings < 0 || tv.crossing_count() <= max_crossings) return tv;
    }
  }
};

}  // namespace tanglekit
