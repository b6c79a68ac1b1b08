#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "zigzag/decompose.hpp"
#include "zigzag/trails.hpp"

namespace zigzag {

// Spanning arc subset that subdivides a rooted binary phylogenetic tree on
// the network's leaf set. Arcs are sorted by id; selection records, per
// trail, which admissible pattern produced it.
struct SubdivisionTree {
  std::vector<ArcId> arcs;
  std::vector<std::uint32_t> selection;
};

struct DeviationReport {
  std::size_t delta;          // minimum leaves to attach
  std::size_t w_fence_count;  // equal to delta
  // The path/leaf deviation indices coincide with delta.
  std::size_t ell() const { return delta; }
  std::size_t p() const { return delta; }
};

class NotTreeBased : public Error {
 public:
  explicit NotTreeBased(std::vector<std::uint32_t> witnesses)
      : Error(ErrorCode::NotTreeBased,
              "network is not tree-based (" +
                  std::to_string(witnesses.size()) + " W-fence(s))"),
        witnesses_(std::move(witnesses)) {}

  // Indices of the W-fence trails in the decomposition.
  const std::vector<std::uint32_t>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::uint32_t> witnesses_;
};

bool is_tree_based(const Decomposition& d);

std::vector<std::uint32_t> w_fence_indices(const Decomposition& d);

// Expands per-trail choices into a sorted arc set.
SubdivisionTree assemble_tree(const Network& net, const Decomposition& d,
                              std::vector<std::uint32_t> selection);

// Choice 0 in every trail; throws NotTreeBased with witnesses otherwise.
SubdivisionTree find_subdivision_tree(const Network& net,
                                      const Decomposition& d);

DeviationReport deviation(const Decomposition& d);

mpz_class count(const Decomposition& d);

// Mixed-radix odometer over per-trail choices; the last trail varies
// fastest. A non-tree-based decomposition yields an empty stream.
class EnumerationCursor {
 public:
  EnumerationCursor(const Network& net, const Decomposition& d);

  // Fills `out` with the next tree; false when the stream is exhausted.
  bool next(SubdivisionTree& out);
  bool exhausted() const { return exhausted_; }

 private:
  const Network* net_;
  const Decomposition* d_;
  std::vector<std::uint32_t> radix_;
  std::vector<std::uint32_t> digits_;
  bool exhausted_;
};

std::vector<SubdivisionTree> enumerate_k(const Network& net,
                                         const Decomposition& d,
                                         const mpz_class& k);

struct OptimizeResult {
  SubdivisionTree tree;
  double score;
};

// Arc-indexed weights (size |A|); per-trail argmax pieced together.
OptimizeResult optimize(const Network& net, const Decomposition& d,
                        std::span<const double> weights, Direction direction);

std::vector<SubdivisionTree> sample_uniform(const Network& net,
                                            const Decomposition& d,
                                            std::uint64_t seed,
                                            std::size_t n);

bool verify_subdivision_tree(const Network& net, std::span<const ArcId> arcs);

bool is_admissible_global(const Network& net, std::span<const ArcId> arcs);

// Vertex-disjoint directed paths covering V(N), each ending at a leaf.
using PathPartition = std::vector<std::vector<VertexId>>;

PathPartition path_partition_from_tree(const Network& net,
                                       const SubdivisionTree& tree);

}  // namespace zigzag
