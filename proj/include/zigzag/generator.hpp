#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zigzag/decompose.hpp"
#include "zigzag/network.hpp"

namespace zigzag {
namespace generator {

// Random rooted binary phylogenetic network with exactly `leaf_count` leaves
// and `reticulation_count` reticulations; deterministic per seed.
Network random_network(std::size_t leaf_count, std::size_t reticulation_count,
                       std::uint64_t seed);

using Profile = std::vector<std::pair<TrailKind, std::size_t>>;

// Network (almost-binary in general) whose maximal zig-zag trail
// decomposition realizes exactly the requested profile.
Network gadget_with_profile(const Profile& profile);

// Subdivide `arc` and hang a fresh leaf on the new vertex.
Network attach_leaf(const Network& net, ArcId arc);

}  // namespace generator
}  // namespace zigzag
