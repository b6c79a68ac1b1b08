#include "zigzag/generator.hpp"

#include <deque>
#include <string>

#include "zigzag/rng.hpp"

namespace zigzag {
namespace generator {

Network random_network(std::size_t leaf_count, std::size_t reticulation_count,
                       std::uint64_t seed) {
  if (leaf_count < 1) {
    throw Error(ErrorCode::InfeasibleParameters, "need at least one leaf");
  }
  if (leaf_count == 1) {
    if (reticulation_count > 0) {
      throw Error(ErrorCode::InfeasibleParameters,
                  "no binary network with one leaf has reticulations");
    }
    return Network::from_arcs({{"r", "x1", std::nullopt}}, Strictness::Binary);
  }

  // Event simulation: grow from the root by speciations (one slot splits in
  // two) and hybridizations (two slots with distinct parents merge into a
  // reticulation). Vertices are created in topological order, so the result
  // is acyclic by construction.
  std::size_t speciations = leaf_count + reticulation_count - 2;
  std::size_t hybridizations = reticulation_count;

  SplitMix64 rng(seed);
  std::vector<ArcSpec> arcs;
  std::vector<std::string> slots = {"r", "r"};  // pending out-arcs, by parent
  std::size_t tree_id = 0, hybrid_id = 0;

  auto take_slot = [&](std::size_t i) {
    std::string parent = slots[i];
    slots[i] = slots.back();
    slots.pop_back();
    return parent;
  };

  while (speciations + hybridizations > 0) {
    bool hybrid =
        hybridizations > 0 &&
        rng.below(speciations + hybridizations) < hybridizations;
    if (hybrid && slots.size() >= 2) {
      std::size_t i = rng.below(slots.size());
      std::size_t j = rng.below(slots.size() - 1);
      if (j >= i) ++j;
      if (slots[i] == slots[j] && speciations == 0) {
        // Must hybridize, but the sampled pair shares a parent (duplicate
        // arc). At least three slots remain here and a parent owns at most
        // two, so a partner with a different parent always exists.
        for (std::size_t k = 0; k < slots.size(); ++k) {
          if (slots[k] != slots[i]) {
            j = k;
            break;
          }
        }
      }
      if (slots[i] == slots[j]) {
        // Same parent would create a duplicate arc; speciate instead.
        hybrid = false;
      } else {
        std::string child = "h" + std::to_string(++hybrid_id);
        if (i < j) std::swap(i, j);  // pop the larger index first
        arcs.push_back({take_slot(i), child, std::nullopt});
        arcs.push_back({take_slot(j), child, std::nullopt});
        slots.push_back(child);
        --hybridizations;
        continue;
      }
    } else if (hybrid) {
      hybrid = false;
    }
    if (speciations == 0) {
      throw Error(ErrorCode::InfeasibleParameters,
                  "cannot schedule requested reticulations");
    }
    std::size_t i = rng.below(slots.size());
    std::string child = "t" + std::to_string(++tree_id);
    arcs.push_back({take_slot(i), child, std::nullopt});
    slots.push_back(child);
    slots.push_back(child);
    --speciations;
  }

  for (std::size_t i = 0; i < slots.size(); ++i) {
    arcs.push_back({slots[i], "x" + std::to_string(i + 1), std::nullopt});
  }
  return Network::from_arcs(arcs, Strictness::Binary);
}

namespace {

struct Gadget {
  // Local arcs as (tail, head) over local vertex ids 0..vertex_count-1.
  std::vector<std::pair<int, int>> arcs;
  int vertex_count = 0;
  std::vector<int> need_ins;    // internal vertices still lacking an in-arc
  std::vector<int> need_outs;   // reticulations still lacking an out-arc
  std::vector<int> free_heads;  // degree-(1,0) vertices, leaf candidates
};

Gadget make_gadget(TrailKind kind, std::size_t m) {
  Gadget g;
  auto bad = [&](const char* why) {
    throw Error(ErrorCode::Unrealizable,
                std::string(trail_kind_name(kind)) + " of size " +
                    std::to_string(m) + ": " + why);
  };
  switch (kind) {
    case TrailKind::NFence: {
      if (m < 1 || m % 2 == 0) bad("size must be odd");
      g.vertex_count = int(m) + 1;
      // v0 > v1 < v2 > ... > vm
      for (std::size_t j = 1; j <= m; ++j) {
        if (j % 2 == 1) {
          g.arcs.emplace_back(int(j - 1), int(j));
        } else {
          g.arcs.emplace_back(int(j), int(j - 1));
        }
      }
      g.need_ins.push_back(0);
      for (std::size_t v = 2; v + 1 <= m; v += 2) g.need_ins.push_back(int(v));
      for (std::size_t v = 1; v + 2 <= m; v += 2) g.need_outs.push_back(int(v));
      g.free_heads.push_back(int(m));
      break;
    }
    case TrailKind::MFence: {
      if (m < 2 || m % 2 == 1) bad("size must be even");
      g.vertex_count = int(m) + 1;
      // v0 < v1 > v2 < ... > vm
      for (std::size_t j = 1; j <= m; ++j) {
        if (j % 2 == 1) {
          g.arcs.emplace_back(int(j), int(j - 1));
        } else {
          g.arcs.emplace_back(int(j - 1), int(j));
        }
      }
      for (std::size_t v = 1; v <= m - 1; v += 2) g.need_ins.push_back(int(v));
      for (std::size_t v = 2; v + 2 <= m; v += 2) g.need_outs.push_back(int(v));
      g.free_heads.push_back(0);
      g.free_heads.push_back(int(m));
      break;
    }
    case TrailKind::WFence: {
      if (m < 2 || m % 2 == 1) bad("size must be even");
      g.vertex_count = int(m) + 1;
      // v0 > v1 < v2 > ... < vm
      for (std::size_t j = 1; j <= m; ++j) {
        if (j % 2 == 1) {
          g.arcs.emplace_back(int(j - 1), int(j));
        } else {
          g.arcs.emplace_back(int(j), int(j - 1));
        }
      }
      g.need_ins.push_back(0);
      g.need_ins.push_back(int(m));
      for (std::size_t v = 2; v + 2 <= m; v += 2) g.need_ins.push_back(int(v));
      for (std::size_t v = 1; v <= m - 1; v += 2) g.need_outs.push_back(int(v));
      break;
    }
    case TrailKind::Crown: {
      if (m < 4 || m % 2 == 1) bad("size must be even and at least 4");
      g.vertex_count = int(m);
      std::size_t k = m / 2;
      // Alternating cycle: tails at even local ids, heads at odd ones.
      for (std::size_t i = 0; i < k; ++i) {
        g.arcs.emplace_back(int(2 * i), int(2 * i + 1));
        g.arcs.emplace_back(int((2 * i + 2) % m), int(2 * i + 1));
      }
      for (std::size_t i = 0; i < k; ++i) g.need_ins.push_back(int(2 * i));
      for (std::size_t i = 0; i < k; ++i) g.need_outs.push_back(int(2 * i + 1));
      break;
    }
  }
  return g;
}

}  // namespace

Network gadget_with_profile(const Profile& profile) {
  if (profile.empty()) {
    throw Error(ErrorCode::Unrealizable, "empty profile");
  }

  // Assemble trail gadgets by identifying vertices: every pending in-arc need
  // is satisfied by merging with a supplier (a reticulation lacking an
  // out-arc, or a dangling head) from an earlier gadget, except one that
  // becomes the root. Supplier-to-consumer merges always point from earlier
  // to later gadgets, so the result stays acyclic.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].first != TrailKind::NFence || profile[i].second > 1) {
      order.push_back(i);
    }
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].first == TrailKind::NFence && profile[i].second == 1) {
      order.push_back(i);
    }
  }

  std::vector<std::pair<int, int>> global_arcs;
  int next_vertex = 0;
  std::deque<int> outs;   // suppliers that must be consumed
  std::deque<int> frees;  // optional suppliers; leftovers become leaves
  bool root_used = false;
  int root_vertex = -1;
  std::vector<std::size_t> pending = order;

  while (!pending.empty()) {
    bool progress = false;
    std::vector<std::size_t> deferred;
    for (std::size_t idx : pending) {
      Gadget g = make_gadget(profile[idx].first, profile[idx].second);
      std::size_t avail = outs.size() + frees.size() + (root_used ? 0 : 1);
      if (g.need_ins.size() > avail) {
        deferred.push_back(idx);
        continue;
      }

      std::vector<int> mapping(g.vertex_count, -1);
      for (int v : g.need_ins) {
        if (!outs.empty()) {
          mapping[v] = outs.front();
          outs.pop_front();
        } else if (!frees.empty()) {
          mapping[v] = frees.front();
          frees.pop_front();
        } else {
          root_used = true;  // leave unfed: this vertex is the root
        }
      }
      for (int v = 0; v < g.vertex_count; ++v) {
        if (mapping[v] < 0) mapping[v] = next_vertex++;
      }
      // Suppliers only shrink while feeding, so at most the last need-in is
      // left unfed; that vertex is the root.
      if (root_vertex < 0 && root_used) {
        root_vertex = mapping[g.need_ins.back()];
      }
      for (auto [t, h] : g.arcs) {
        global_arcs.emplace_back(mapping[t], mapping[h]);
      }
      for (int v : g.need_outs) outs.push_back(mapping[v]);
      for (int v : g.free_heads) frees.push_back(mapping[v]);
      progress = true;
    }
    pending.swap(deferred);
    if (!progress && !pending.empty()) {
      throw Error(ErrorCode::Unrealizable,
                  "no placement order satisfies the profile");
    }
  }
  if (!outs.empty()) {
    throw Error(ErrorCode::Unrealizable,
                "profile leaves a reticulation without outgoing arcs");
  }
  if (frees.empty()) {
    throw Error(ErrorCode::Unrealizable, "profile admits no leaves");
  }

  std::vector<std::string> names(static_cast<std::size_t>(next_vertex),
                                 std::string());
  std::size_t leaf_no = 0;
  for (int v : frees) names[std::size_t(v)] = "x" + std::to_string(++leaf_no);
  if (root_vertex >= 0 && names[std::size_t(root_vertex)].empty()) {
    names[std::size_t(root_vertex)] = "r";
  }
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (names[v].empty()) names[v] = "v" + std::to_string(v);
  }

  std::vector<ArcSpec> specs;
  specs.reserve(global_arcs.size());
  for (auto [t, h] : global_arcs) {
    specs.push_back({names[std::size_t(t)], names[std::size_t(h)],
                     std::nullopt});
  }
  return Network::from_arcs(specs, Strictness::AlmostBinary);
}

Network attach_leaf(const Network& net, ArcId arc) {
  net.check_arc(arc);

  auto unique_name = [&](std::string base) {
    while (net.find_vertex(base)) base += "_";
    return base;
  };
  std::string mid = unique_name("s");
  std::string leaf = unique_name("y");

  std::vector<ArcSpec> specs;
  specs.reserve(net.arc_count() + 2);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& old = net.arc(a);
    std::optional<double> w =
        old.has_weight ? std::optional<double>(old.weight) : std::nullopt;
    if (a == arc) {
      specs.push_back({net.name(old.tail), mid, w});
    } else {
      specs.push_back({net.name(old.tail), net.name(old.head), w});
    }
  }
  const Arc& old = net.arc(arc);
  specs.push_back({mid, net.name(old.head), std::nullopt});
  specs.push_back({mid, leaf, std::nullopt});
  return Network::from_arcs(specs, net.strictness());
}

}  // namespace generator
}  // namespace zigzag
