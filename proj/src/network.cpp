#include "zigzag/network.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace zigzag {

namespace {

bool has_whitespace(const std::string& s) {
  return s.find_first_of(" \t\r\n\f\v") != std::string::npos;
}

}  // namespace

Network Network::from_arcs(const std::vector<ArcSpec>& specs,
                           Strictness strictness) {
  if (specs.empty()) {
    throw Error(ErrorCode::NoLeaves, "arc list is empty");
  }

  Network net;
  net.strictness_ = strictness;

  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& name) -> VertexId {
    if (name.empty() || has_whitespace(name)) {
      throw Error(ErrorCode::SyntaxError,
                  "invalid vertex name '" + name + "'");
    }
    auto [it, fresh] = index.emplace(name, VertexId(net.names_.size()));
    if (fresh) net.names_.push_back(name);
    return it->second;
  };

  for (const ArcSpec& s : specs) {
    VertexId u = intern(s.tail);
    VertexId v = intern(s.head);
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at '" + s.tail + "'");
    }
    if (s.weight && *s.weight < 0.0) {
      throw Error(ErrorCode::NegativeWeight,
                  "negative weight on arc " + s.tail + " -> " + s.head);
    }
    Arc arc{u, v, s.weight.value_or(0.0), s.weight.has_value()};
    net.arcs_.push_back(arc);
  }

  std::size_t n = net.names_.size();
  net.in_slot_.resize(n);
  net.out_slot_.resize(n);
  net.in_count_.assign(n, 0);
  net.out_count_.assign(n, 0);

  {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(net.arcs_.size() * 2);
    for (const Arc& arc : net.arcs_) {
      std::uint64_t key = (std::uint64_t(arc.tail) << 32) | arc.head;
      if (!seen.insert(key).second) {
        throw Error(ErrorCode::DuplicateArc,
                    "duplicate arc " + net.names_[arc.tail] + " -> " +
                        net.names_[arc.head]);
      }
    }
  }

  for (ArcId a = 0; a < net.arcs_.size(); ++a) {
    const Arc& arc = net.arcs_[a];
    if (net.out_count_[arc.tail] >= 2) {
      throw Error(ErrorCode::DegreeViolation,
                  "out-degree of '" + net.names_[arc.tail] + "' exceeds 2");
    }
    if (net.in_count_[arc.head] >= 2) {
      throw Error(ErrorCode::DegreeViolation,
                  "in-degree of '" + net.names_[arc.head] + "' exceeds 2");
    }
    net.out_slot_[arc.tail][net.out_count_[arc.tail]++] = a;
    net.in_slot_[arc.head][net.in_count_[arc.head]++] = a;
  }

  // Root: unique vertex of in-degree 0, out-degree 1 or 2.
  bool root_found = false;
  for (VertexId v = 0; v < n; ++v) {
    if (net.in_count_[v] == 0) {
      if (root_found) {
        throw Error(ErrorCode::MultipleRoots,
                    "more than one vertex with in-degree 0 ('" +
                        net.names_[net.root_] + "', '" + net.names_[v] + "')");
      }
      net.root_ = v;
      root_found = true;
    }
  }
  if (!root_found) {
    throw Error(ErrorCode::NoRoot, "no vertex with in-degree 0");
  }
  if (net.out_count_[net.root_] < 1 || net.out_count_[net.root_] > 2) {
    throw Error(ErrorCode::DegreeViolation,
                "root '" + net.names_[net.root_] + "' has out-degree " +
                    std::to_string(net.out_count_[net.root_]));
  }

  net.strictly_binary_ = true;
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t din = net.in_count_[v];
    std::uint32_t dout = net.out_count_[v];
    if (v == net.root_) continue;
    if (din == 1 && dout == 0) {
      net.leaves_.push_back(v);
      continue;
    }
    if (din < 1 || dout < 1) {
      throw Error(ErrorCode::DegreeViolation,
                  "vertex '" + net.names_[v] + "' has degrees (" +
                      std::to_string(din) + "," + std::to_string(dout) + ")");
    }
    bool binary = (din == 1 && dout == 2) || (din == 2 && dout == 1);
    if (!binary) {
      net.strictly_binary_ = false;
      if (strictness == Strictness::Binary) {
        throw Error(ErrorCode::DegreeViolation,
                    "vertex '" + net.names_[v] + "' has degrees (" +
                        std::to_string(din) + "," + std::to_string(dout) +
                        "), not allowed in strict binary mode");
      }
    }
  }
  if (net.leaves_.empty()) {
    throw Error(ErrorCode::NoLeaves, "network has no leaves");
  }

  // Kahn's algorithm; any unprocessed vertex sits on a cycle.
  {
    std::vector<std::uint32_t> pending(net.in_count_.begin(),
                                       net.in_count_.end());
    std::vector<VertexId> stack{net.root_};
    std::size_t seen = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++seen;
      for (ArcId a : net.out_arcs(v)) {
        VertexId w = net.arcs_[a].head;
        if (--pending[w] == 0) stack.push_back(w);
      }
    }
    if (seen != n) {
      throw Error(ErrorCode::CycleDetected, "input digraph contains a cycle");
    }
  }

  return net;
}

std::optional<VertexId> Network::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

void Network::check_vertex(VertexId v) const {
  if (v >= names_.size()) {
    throw Error(ErrorCode::UnknownVertex,
                "vertex id " + std::to_string(v) + " out of range");
  }
}

void Network::check_arc(ArcId a) const {
  if (a >= arcs_.size()) {
    throw Error(ErrorCode::UnknownArc,
                "arc id " + std::to_string(a) + " out of range");
  }
}

VertexKind classify_vertex(const Network& net, VertexId v) {
  net.check_vertex(v);
  std::uint32_t din = net.in_degree(v);
  std::uint32_t dout = net.out_degree(v);

  VertexKind kind{};
  kind.in = din;
  kind.out = dout;

  if (v == net.root()) {
    kind.category = VertexCategory::Root;
  } else if (din == 1 && dout == 0) {
    kind.category = VertexCategory::Leaf;
  } else if (din == 1 && dout == 2) {
    kind.category = VertexCategory::TreeVertex;
  } else if (din == 2 && dout == 1) {
    kind.category = VertexCategory::Reticulation;
  } else {
    kind.category = VertexCategory::Hybrid;  // almost-binary shapes
  }

  kind.omnian = false;
  if (dout > 0) {
    bool all_ret = true;
    for (ArcId a : net.out_arcs(v)) {
      if (!net.is_reticulation(net.arc(a).head)) all_ret = false;
    }
    kind.omnian = all_ret;
  }

  kind.reticulation_type = ReticulationType::None;
  if (din == 2) {
    int ret_parents = 0;
    for (ArcId a : net.in_arcs(v)) {
      if (net.is_reticulation(net.arc(a).tail)) ++ret_parents;
    }
    kind.reticulation_type = ret_parents == 2   ? ReticulationType::Type0
                             : ret_parents == 1 ? ReticulationType::Type1
                                                : ReticulationType::Type2;
  }

  return kind;
}

}  // namespace zigzag
