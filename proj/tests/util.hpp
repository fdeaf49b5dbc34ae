#pragma once

#include <random>

#include "mixbraid/word.hpp"

namespace mixbraid::testutil {

// Random reduced word in a-generators and crossings.
inline BraidWord random_word(std::mt19937& rng, int g, int n, int len, bool handles = true) {
  std::vector<Generator> runs;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < len; ++i) {
    int sign = coin(rng) ? 1 : -1;
    bool use_sigma = n > 1 && (g == 0 || !handles || coin(rng));
    if (use_sigma) {
      std::uniform_int_distribution<int> idx(1, n - 1);
      runs.push_back(Generator{Kind::Sigma, idx(rng), sign});
    } else if (g >= 1 && handles) {
      std::uniform_int_distribution<int> idx(1, g);
      runs.push_back(Generator{Kind::A, idx(rng), sign});
    }
  }
  return make_word(g, n, runs);
}

inline BraidWord random_b_word(std::mt19937& rng, int g, int n, int len) {
  std::vector<Generator> runs;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < len; ++i) {
    int sign = coin(rng) ? 1 : -1;
    if (n > 1 && coin(rng)) {
      std::uniform_int_distribution<int> idx(1, n - 1);
      runs.push_back(Generator{Kind::Sigma, idx(rng), sign});
    } else if (g >= 1) {
      std::uniform_int_distribution<int> idx(1, g);
      runs.push_back(Generator{Kind::B, idx(rng), sign});
    }
  }
  return make_word(g, n, runs);
}

}  // namespace mixbraid::testutil
