#include "zigzag/oracle.hpp"

#include "zigzag/analysis.hpp"

namespace zigzag {
namespace oracle {

std::vector<std::vector<ArcId>> brute_force_admissible_sets(
    const Network& net) {
  std::size_t m = net.arc_count();
  if (m > 24) {
    throw Error(ErrorCode::TooLarge,
                "brute force limited to 24 arcs, got " + std::to_string(m));
  }
  std::vector<std::vector<ArcId>> result;
  std::vector<ArcId> subset;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    subset.clear();
    for (std::uint32_t a = 0; a < m; ++a) {
      if (mask & (1u << a)) subset.push_back(a);
    }
    if (is_admissible_global(net, subset)) result.push_back(subset);
  }
  return result;
}

BipartiteGraph build_bipartite(const Network& net) {
  BipartiteGraph g;
  g.left_size = net.vertex_count();
  g.right_size = net.vertex_count();
  g.edges.resize(g.left_size);
  for (const Arc& arc : net.arcs()) {
    g.edges[arc.tail].push_back(arc.head);
  }
  return g;
}

namespace {

constexpr std::uint32_t kFree = ~std::uint32_t(0);

bool augment(const BipartiteGraph& g, std::uint32_t u,
             std::vector<std::uint32_t>& match_right,
             std::vector<char>& visited) {
  for (std::uint32_t v : g.edges[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] == kFree ||
        augment(g, match_right[v], match_right, visited)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

// Kuhn's augmenting-path search. The oracle is desk-scale, so the simple
// O(V*E) bound is fine.
std::size_t max_matching(const BipartiteGraph& g) {
  std::vector<std::uint32_t> match_right(g.right_size, kFree);
  std::size_t size = 0;
  for (std::uint32_t u = 0; u < g.left_size; ++u) {
    std::vector<char> visited(g.right_size, 0);
    if (augment(g, u, match_right, visited)) ++size;
  }
  return size;
}

std::size_t deviation_via_matching(const Network& net) {
  std::size_t m = max_matching(build_bipartite(net));
  return net.vertex_count() - net.leaves().size() - m;
}

}  // namespace oracle
}  // namespace zigzag
