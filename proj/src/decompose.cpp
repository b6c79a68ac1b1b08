#include "zigzag/decompose.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace zigzag {

const char* trail_kind_name(TrailKind kind) {
  switch (kind) {
    case TrailKind::Crown: return "crown";
    case TrailKind::NFence: return "N-fence";
    case TrailKind::MFence: return "M-fence";
    case TrailKind::WFence: return "W-fence";
  }
  return "?";
}

namespace {

constexpr ArcId kNone = ~ArcId(0);

}  // namespace

Decomposition decompose(const Network& net) {
  Decomposition d;
  std::size_t m = net.arc_count();
  d.arc_to_trail.assign(m, {0, 0});
  std::vector<char> visited(m, 0);

  // Compact per-arc tables built with sequential passes: partner arcs for
  // the walk, end vertices for orientation. Keeping these flat (4 bytes per
  // entry) instead of chasing Arc records makes large inputs cache-friendly.
  std::vector<ArcId> hp(m, kNone), tp(m, kNone);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto in = net.in_arcs(v);
    if (in.size() == 2) {
      hp[in[0]] = in[1];
      hp[in[1]] = in[0];
    }
    auto out = net.out_arcs(v);
    if (out.size() == 2) {
      tp[out[0]] = out[1];
      tp[out[1]] = out[0];
    }
  }
  std::vector<VertexId> tails(m), heads(m);
  for (ArcId a = 0; a < m; ++a) {
    tails[a] = net.arc(a).tail;
    heads[a] = net.arc(a).head;
  }

  // Pass 1: discover every maximal trail as a slice of one flat arc
  // sequence (reversed-backward walk, start arc, forward walk).
  struct RawTrail {
    std::uint32_t begin;
    std::uint32_t size;
    bool closed;
  };
  std::vector<ArcId> seq;
  seq.reserve(m);
  std::vector<RawTrail> raw;
  raw.reserve(m / 2 + 1);
  std::vector<ArcId> fwd, bwd;  // shared walk buffers

  for (ArcId a0 = 0; a0 < m; ++a0) {
    if (visited[a0]) continue;
    visited[a0] = 1;

    bool closed = false;
    fwd.clear();
    {
      ArcId cur = a0;
      bool use_head = true;
      while (true) {
        ArcId p = use_head ? hp[cur] : tp[cur];
        if (p == kNone) break;
        if (p == a0) {
          closed = true;
          break;
        }
        visited[p] = 1;
        fwd.push_back(p);
        cur = p;
        use_head = !use_head;
      }
    }

    std::uint32_t begin = std::uint32_t(seq.size());
    if (!closed) {
      bwd.clear();
      ArcId cur = a0;
      bool use_head = false;
      while (true) {
        ArcId p = use_head ? hp[cur] : tp[cur];
        if (p == kNone) break;
        visited[p] = 1;
        bwd.push_back(p);
        cur = p;
        use_head = !use_head;
      }
      seq.insert(seq.end(), bwd.rbegin(), bwd.rend());
    }
    seq.push_back(a0);
    seq.insert(seq.end(), fwd.begin(), fwd.end());
    raw.push_back({begin, std::uint32_t(seq.size()) - begin, closed});
  }

  // Pass 2a: canonical orientation. End-vertex lookups hit random positions,
  // so issue them a window ahead. Keeping this phase separate from trail
  // construction lets each loop stream through memory on its own.
  struct Orientation {
    std::optional<std::pair<VertexId, VertexId>> endpoints;
    bool first_link_head = true;
  };
  std::vector<Orientation> orient(raw.size());
  constexpr std::size_t kLookahead = 16;
  auto prefetch_ends = [&](std::size_t i) {
    if (i >= raw.size()) return;
    ArcId f = seq[raw[i].begin];
    ArcId b = seq[raw[i].begin + raw[i].size - 1];
    __builtin_prefetch(&tails[f]);
    __builtin_prefetch(&heads[f]);
    __builtin_prefetch(&tails[b]);
    __builtin_prefetch(&heads[b]);
    if (raw[i].size >= 2) __builtin_prefetch(&heads[seq[raw[i].begin + 1]]);
  };
  for (std::size_t i = 0; i < kLookahead && i < raw.size(); ++i) {
    prefetch_ends(i);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    prefetch_ends(i + kLookahead);
    const RawTrail& r = raw[i];
    if (r.closed) continue;
    auto slice_begin = seq.begin() + r.begin;
    auto slice_end = slice_begin + r.size;
    Orientation& o = orient[i];
    if (r.size >= 2) {
      o.first_link_head = heads[*slice_begin] == heads[*(slice_begin + 1)];
      VertexId v0 =
          o.first_link_head ? tails[*slice_begin] : heads[*slice_begin];
      // Link types alternate, so the last link's type follows from parity.
      bool last_head = o.first_link_head == (r.size % 2 == 0);
      VertexId vm =
          last_head ? tails[*(slice_end - 1)] : heads[*(slice_end - 1)];
      if (vm < v0) {
        std::reverse(slice_begin, slice_end);
        std::swap(v0, vm);
        o.first_link_head = last_head;
      }
      o.endpoints = {v0, vm};
    } else {
      o.endpoints = {tails[*slice_begin], heads[*slice_begin]};
    }
  }

  // Pass 2b: build the Trail records.
  d.trails.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawTrail& r = raw[i];
    auto slice_begin = seq.begin() + r.begin;
    Trail trail;
    trail.closed = r.closed;
    trail.first_link_head = orient[i].first_link_head;
    trail.endpoints = orient[i].endpoints;
    trail.arcs.assign(slice_begin, slice_begin + r.size);
    trail.kind = classify_trail(trail);
    d.kind_counts[static_cast<std::size_t>(trail.kind)]++;
    d.trails.push_back(std::move(trail));
  }

  // Pass 2c: arc-to-trail index.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Trail& t = d.trails[i];
    for (std::uint32_t pos = 0; pos < t.arcs.size(); ++pos) {
      d.arc_to_trail[t.arcs[pos]] = {std::uint32_t(i), pos};
    }
  }

  return d;
}

TrailKind classify_trail(const Trail& trail) {
  std::size_t m = trail.arcs.size();
  if (m == 0) {
    throw Error(ErrorCode::MalformedTrail, "empty trail");
  }
  if (trail.closed) {
    if (m < 4 || m % 2 != 0) {
      throw Error(ErrorCode::MalformedTrail,
                  "closed trail of size " + std::to_string(m));
    }
    return TrailKind::Crown;
  }
  if (m % 2 == 1) return TrailKind::NFence;
  // Even open trail: if the first link shares a head, both end vertices are
  // tails of their end arcs (W); otherwise both are heads (M).
  return trail.first_link_head ? TrailKind::WFence : TrailKind::MFence;
}

std::pair<std::uint32_t, std::uint32_t> trail_of_arc(const Decomposition& d,
                                                     ArcId a) {
  if (a >= d.arc_to_trail.size()) {
    throw Error(ErrorCode::UnknownArc,
                "arc id " + std::to_string(a) + " out of range");
  }
  return d.arc_to_trail[a];
}

}  // namespace zigzag
