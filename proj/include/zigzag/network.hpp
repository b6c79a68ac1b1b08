#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

struct Arc {
  VertexId tail;
  VertexId head;
  double weight = 0.0;
  bool has_weight = false;
};

// One record of the caller-facing arc list; vertices are referred to by name.
struct ArcSpec {
  std::string tail;
  std::string head;
  std::optional<double> weight;
};

enum class Strictness { Binary, AlmostBinary };

// Immutable rooted DAG with labeled leaves. Vertex ids are dense and assigned
// by first appearance in the arc list, so identical input always yields the
// same ids.
class Network {
 public:
  static Network from_arcs(const std::vector<ArcSpec>& arcs,
                           Strictness strictness = Strictness::AlmostBinary);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  VertexId root() const { return root_; }
  const std::vector<VertexId>& leaves() const { return leaves_; }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::uint32_t in_degree(VertexId v) const { return in_count_[v]; }
  std::uint32_t out_degree(VertexId v) const { return out_count_[v]; }

  // At most two entries each (validated at construction).
  std::span<const ArcId> in_arcs(VertexId v) const {
    return {in_slot_[v].data(), in_count_[v]};
  }
  std::span<const ArcId> out_arcs(VertexId v) const {
    return {out_slot_[v].data(), out_count_[v]};
  }

  Strictness strictness() const { return strictness_; }
  bool is_strictly_binary() const { return strictly_binary_; }

  bool is_leaf(VertexId v) const {
    return in_count_[v] == 1 && out_count_[v] == 0;
  }
  bool is_reticulation(VertexId v) const { return in_count_[v] == 2; }

  void check_vertex(VertexId v) const;
  void check_arc(ArcId a) const;

 private:
  Network() = default;

  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  std::vector<std::array<ArcId, 2>> in_slot_;
  std::vector<std::array<ArcId, 2>> out_slot_;
  std::vector<std::uint32_t> in_count_;
  std::vector<std::uint32_t> out_count_;
  std::vector<VertexId> leaves_;
  VertexId root_ = 0;
  Strictness strictness_ = Strictness::AlmostBinary;
  bool strictly_binary_ = false;
};

enum class VertexCategory { Root, Leaf, TreeVertex, Reticulation, Hybrid };

enum class ReticulationType { None, Type0, Type1, Type2 };

struct VertexKind {
  VertexCategory category;
  std::uint32_t in;
  std::uint32_t out;
  bool omnian;
  ReticulationType reticulation_type;
};

VertexKind classify_vertex(const Network& net, VertexId v);

inline std::pair<std::uint32_t, std::uint32_t> degrees(const Network& net,
                                                       VertexId v) {
  net.check_vertex(v);
  return {net.in_degree(v), net.out_degree(v)};
}

}  // namespace zigzag
