#include "zigzag/analysis.hpp"

#include <algorithm>
#include <limits>

#include "zigzag/rng.hpp"

namespace zigzag {

bool is_tree_based(const Decomposition& d) {
  return d.count(TrailKind::WFence) == 0;
}

std::vector<std::uint32_t> w_fence_indices(const Decomposition& d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < d.trails.size(); ++i) {
    if (d.trails[i].kind == TrailKind::WFence) out.push_back(i);
  }
  return out;
}

SubdivisionTree assemble_tree(const Network& net, const Decomposition& d,
                              std::vector<std::uint32_t> selection) {
  std::vector<char> mask(net.arc_count(), 0);
  for (std::size_t i = 0; i < d.trails.size(); ++i) {
    const Trail& t = d.trails[i];
    BitPattern bits = admissible_by_index(t, selection[i]);
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
      if (bits[pos]) mask[t.arcs[pos]] = 1;
    }
  }
  SubdivisionTree tree;
  tree.selection = std::move(selection);
  tree.arcs.reserve(net.vertex_count() - 1);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (mask[a]) tree.arcs.push_back(a);
  }
  return tree;
}

SubdivisionTree find_subdivision_tree(const Network& net,
                                      const Decomposition& d) {
  auto witnesses = w_fence_indices(d);
  if (!witnesses.empty()) throw NotTreeBased(std::move(witnesses));
  return assemble_tree(net, d,
                       std::vector<std::uint32_t>(d.trails.size(), 0));
}

DeviationReport deviation(const Decomposition& d) {
  std::size_t w = d.count(TrailKind::WFence);
  return {w, w};
}

namespace {

mpz_class balanced_product(const std::vector<mpz_class>& v, std::size_t lo,
                           std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return balanced_product(v, lo, mid) * balanced_product(v, mid, hi);
}

}  // namespace

mpz_class count(const Decomposition& d) {
  // Pack small factors into machine words and combine with a balanced
  // product tree; multiplying into one ever-growing number is quadratic in
  // the number of trails.
  std::vector<mpz_class> chunks;
  unsigned long acc = 1;
  for (const Trail& t : d.trails) {
    unsigned long f = (unsigned long)family_size(t);
    if (f == 0) return 0;
    if (acc > std::numeric_limits<unsigned long>::max() / f) {
      chunks.push_back(mpz_class(acc));
      acc = f;
    } else {
      acc *= f;
    }
  }
  chunks.push_back(mpz_class(acc));
  return balanced_product(chunks, 0, chunks.size());
}

EnumerationCursor::EnumerationCursor(const Network& net,
                                     const Decomposition& d)
    : net_(&net), d_(&d), exhausted_(false) {
  radix_.reserve(d.trails.size());
  for (const Trail& t : d.trails) {
    std::uint32_t r = std::uint32_t(family_size(t));
    radix_.push_back(r);
    if (r == 0) exhausted_ = true;
  }
  digits_.assign(d.trails.size(), 0);
}

bool EnumerationCursor::next(SubdivisionTree& out) {
  if (exhausted_) return false;
  out = assemble_tree(*net_, *d_,
                      std::vector<std::uint32_t>(digits_.begin(),
                                                 digits_.end()));
  // Advance the odometer; the last trail varies fastest.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < radix_[i]) return true;
    digits_[i] = 0;
  }
  exhausted_ = true;
  return true;
}

std::vector<SubdivisionTree> enumerate_k(const Network& net,
                                         const Decomposition& d,
                                         const mpz_class& k) {
  if (k > count(d)) {
    throw Error(ErrorCode::KExceedsCount,
                "requested " + k.get_str() + " trees but only " +
                    count(d).get_str() + " exist");
  }
  std::vector<SubdivisionTree> out;
  std::size_t want = k.get_ui();
  out.reserve(want);
  EnumerationCursor cursor(net, d);
  SubdivisionTree t;
  while (out.size() < want && cursor.next(t)) out.push_back(std::move(t));
  return out;
}

OptimizeResult optimize(const Network& net, const Decomposition& d,
                        std::span<const double> weights, Direction direction) {
  if (weights.size() != net.arc_count()) {
    throw Error(ErrorCode::LengthMismatch,
                "weights must cover all arcs of the network");
  }
  auto witnesses = w_fence_indices(d);
  if (!witnesses.empty()) throw NotTreeBased(std::move(witnesses));

  std::vector<std::uint32_t> selection(d.trails.size());
  std::vector<double> local;
  for (std::size_t i = 0; i < d.trails.size(); ++i) {
    const Trail& t = d.trails[i];
    local.clear();
    for (ArcId a : t.arcs) local.push_back(weights[a]);
    BestChoice bc = best_choice(t, local, direction);
    selection[i] = std::uint32_t(bc.choice);
  }
  SubdivisionTree tree = assemble_tree(net, d, std::move(selection));
  // Report the score of the tree as assembled (arc-id summation order), so
  // re-scoring the returned arc set reproduces it bit for bit.
  double score = 0.0;
  for (ArcId a : tree.arcs) score += weights[a];
  return {std::move(tree), score};
}

std::vector<SubdivisionTree> sample_uniform(const Network& net,
                                            const Decomposition& d,
                                            std::uint64_t seed,
                                            std::size_t n) {
  auto witnesses = w_fence_indices(d);
  if (!witnesses.empty()) throw NotTreeBased(std::move(witnesses));

  SplitMix64 rng(seed);
  std::vector<SubdivisionTree> out;
  out.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::uint32_t> selection(d.trails.size());
    for (std::size_t i = 0; i < d.trails.size(); ++i) {
      std::size_t fam = family_size(d.trails[i]);
      selection[i] = fam > 1 ? std::uint32_t(rng.below(fam)) : 0;
    }
    out.push_back(assemble_tree(net, d, std::move(selection)));
  }
  return out;
}

bool verify_subdivision_tree(const Network& net, std::span<const ArcId> arcs) {
  std::size_t n = net.vertex_count();
  if (arcs.size() != n - 1) return false;

  std::vector<std::uint32_t> din(n, 0), dout(n, 0);
  std::vector<char> used(net.arc_count(), 0);
  for (ArcId a : arcs) {
    if (a >= net.arc_count() || used[a]) return false;
    used[a] = 1;
    din[net.arc(a).head]++;
    dout[net.arc(a).tail]++;
  }

  for (VertexId v = 0; v < n; ++v) {
    if (v == net.root()) {
      if (din[v] != 0 || dout[v] < 1 || dout[v] > 2) return false;
    } else if (din[v] != 1) {
      return false;  // not a spanning arborescence
    } else if (dout[v] > 2) {
      return false;
    } else if ((dout[v] == 0) != net.is_leaf(v)) {
      return false;  // suppression must recover exactly the leaf set X
    }
  }
  // |V|-1 arcs with every non-root vertex of in-degree 1, inside an acyclic
  // host: connectivity from the root follows.
  return true;
}

bool is_admissible_global(const Network& net, std::span<const ArcId> arcs) {
  std::vector<char> in_set(net.arc_count(), 0);
  for (ArcId a : arcs) {
    if (a >= net.arc_count()) return false;
    in_set[a] = 1;
  }
  // C0: arcs whose head has in-degree 1 or whose tail has out-degree 1.
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if ((net.in_degree(arc.head) == 1 || net.out_degree(arc.tail) == 1) &&
        !in_set[a]) {
      return false;
    }
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto in = net.in_arcs(v);
    if (in.size() == 2) {  // C1: exactly one
      if (in_set[in[0]] + in_set[in[1]] != 1) return false;
    }
    auto out = net.out_arcs(v);
    if (out.size() == 2) {  // C2: at least one
      if (in_set[out[0]] + in_set[out[1]] < 1) return false;
    }
  }
  return true;
}

PathPartition path_partition_from_tree(const Network& net,
                                       const SubdivisionTree& tree) {
  if (!verify_subdivision_tree(net, tree.arcs)) {
    throw Error(ErrorCode::InvalidTree,
                "arc set is not a subdivision tree of the network");
  }
  std::size_t n = net.vertex_count();
  constexpr VertexId kNone = ~VertexId(0);
  std::vector<VertexId> succ(n, kNone);
  std::vector<char> has_pred(n, 0);
  // Keep one outgoing arc per branching point: the lower-indexed one.
  std::vector<ArcId> keep(n, ~ArcId(0));
  for (ArcId a : tree.arcs) {
    VertexId u = net.arc(a).tail;
    if (keep[u] == ~ArcId(0) || a < keep[u]) keep[u] = a;
  }
  for (VertexId u = 0; u < n; ++u) {
    if (keep[u] == ~ArcId(0)) continue;
    VertexId w = net.arc(keep[u]).head;
    succ[u] = w;
    has_pred[w] = 1;
  }
  PathPartition paths;
  for (VertexId v = 0; v < n; ++v) {
    if (has_pred[v]) continue;
    std::vector<VertexId> path;
    for (VertexId cur = v; cur != kNone; cur = succ[cur]) {
      path.push_back(cur);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace zigzag
