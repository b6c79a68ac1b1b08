#pragma once

#include <cstdint>
#include <vector>

#include "zigzag/network.hpp"

namespace zigzag {
namespace oracle {

// Exhaustive search over all arc subsets; desk-scale only (|A| <= 24).
// Results are arc-id sets in lexicographic bitmask order.
std::vector<std::vector<ArcId>> brute_force_admissible_sets(
    const Network& net);

struct BipartiteGraph {
  std::size_t left_size;   // = |V(N)|
  std::size_t right_size;  // = |V(N)|
  // edges[u] lists right-side vertices adjacent to left vertex u.
  std::vector<std::vector<std::uint32_t>> edges;
};

// Two copies of V(N), one edge per arc.
BipartiteGraph build_bipartite(const Network& net);

std::size_t max_matching(const BipartiteGraph& g);

// delta(N) = |V(N)| - |X| - m(G_N), the matching-based baseline.
std::size_t deviation_via_matching(const Network& net);

}  // namespace oracle
}  // namespace zigzag
