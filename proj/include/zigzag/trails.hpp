#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zigzag/decompose.hpp"

namespace zigzag {

// 0-1 incidence over a trail's canonical arc order.
using BitPattern = std::vector<std::uint8_t>;

// Number of admissible subsets of the trail's arc set:
// 0 for a W-fence, 1 for an N-fence, 2 for a crown, m/2 for an M-fence.
std::size_t family_size(const Trail& trail);

// The choice-th admissible pattern in canonical order:
//   crown:    0 -> <(10)^{m/2}>, 1 -> <(01)^{m/2}>
//   N-fence:  0 -> <1(01)^{(m-1)/2}>
//   M-fence:  p -> <1(01)^p(10)^q 1>, q = (m-2)/2 - p
BitPattern admissible_by_index(const Trail& trail, std::size_t choice);

// Checks the per-trail admissibility conditions: forced end arcs, exactly one
// arc per shared head, at least one arc per shared tail.
bool is_admissible_local(const Trail& trail, const BitPattern& pattern);

enum class Direction { Maximize, Minimize };

struct BestChoice {
  std::size_t choice;
  double score;
};

// Optimal admissible pattern for the trail under the given per-position
// weights, in O(m) via prefix sums. Ties break toward the smaller choice.
BestChoice best_choice(const Trail& trail, std::span<const double> weights,
                       Direction direction);

}  // namespace zigzag
