#pragma once

#include <random>
#include <vector>

#include "wordchir/word.hpp"

namespace wordchir::testing {

// Reduced word of exactly the requested length.
inline Word random_reduced_word(std::mt19937& rng, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < length) {
    Letter l{flip(rng) ? gen(rng) : -gen(rng)};
    if (!out.empty() && out.back() == l.inverse()) continue;
    out.push_back(l);
  }
  return Word(rank, out);
}

// Unreduced letter soup, for exercising reduction.
inline std::vector<Letter> random_raw_letters(std::mt19937& rng, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(Letter{flip(rng) ? gen(rng) : -gen(rng)});
  return out;
}

// Reference reducer: cancel a random adjacent inverse pair until none left.
inline Word reduce_by_random_cancellation(std::mt19937& rng, int rank,
                                          std::vector<Letter> letters) {
  while (true) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1].inverse()) sites.push_back(i);
    }
    if (sites.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    const std::size_t at = sites[pick(rng)];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(at),
                  letters.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
  return Word(rank, letters);
}

}  // namespace wordchir::testing
