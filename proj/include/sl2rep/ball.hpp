#pragma once

#include <cstddef>
#include <vector>

#include "sl2rep/representation.hpp"

namespace sl2rep {

inline constexpr double kDedupTol = 1e-6;
inline constexpr std::size_t kDefaultBallBudget = 1'000'000;

struct BallElement {
  Word word;        // first (hence geodesic) word reaching the element
  SL2Element image; // image under the reference representation
};

// Freely reduced words of length <= max_length, deduplicated as group
// elements by their dedup_rep matrices (entries compared at
// kDedupTol * max(1, norms); g and -g stay distinct). BFS order: by length,
// then by the expansion order a, a^-1, b, b^-1, ... The empty word comes
// first. Throws BudgetError when more than `budget` candidate words would be
// examined.
std::vector<BallElement> enumerate_ball(const Presentation& p, const Representation& dedup_rep,
                                        int max_length,
                                        std::size_t budget = kDefaultBallBudget);

}  // namespace sl2rep
