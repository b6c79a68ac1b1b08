#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zigzag/network.hpp"

namespace zigzag {

enum class TrailKind { Crown, NFence, MFence, WFence };

const char* trail_kind_name(TrailKind kind);

// One maximal zig-zag trail in canonical orientation. Consecutive arcs
// alternate between sharing a head and sharing a tail; the type of the link
// between arcs[i] and arcs[i+1] is head iff first_link_head == (i % 2 == 0).
struct Trail {
  std::vector<ArcId> arcs;
  TrailKind kind;
  bool closed = false;
  bool first_link_head = false;  // meaningful for size >= 2
  std::optional<std::pair<VertexId, VertexId>> endpoints;  // fences only

  std::size_t size() const { return arcs.size(); }
  bool link_is_head(std::size_t i) const {
    return first_link_head == (i % 2 == 0);
  }
};

struct Decomposition {
  std::vector<Trail> trails;
  // arc id -> (trail index, position within trail)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arc_to_trail;
  std::array<std::size_t, 4> kind_counts{};  // indexed by TrailKind

  std::size_t count(TrailKind k) const {
    return kind_counts[static_cast<std::size_t>(k)];
  }
};

// Canonical maximal zig-zag trail decomposition. Trails appear in order of
// their lowest arc id; fences are listed starting from the endpoint with the
// smaller vertex id, crowns from their lowest arc toward its head partner.
Decomposition decompose(const Network& net);

TrailKind classify_trail(const Trail& trail);

std::pair<std::uint32_t, std::uint32_t> trail_of_arc(const Decomposition& d,
                                                     ArcId a);

}  // namespace zigzag
