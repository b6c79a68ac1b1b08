#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "zigzag/analysis.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/network.hpp"

namespace zigzag {

// Whitespace edge-list format: lines are `#`-comments, blank, or
// `tail head [weight]`.
Network parse_edge_list(std::string_view text,
                        Strictness strictness = Strictness::AlmostBinary);

std::string write_edge_list(const Network& net);

// Restricted extended Newick: hybrid vertices are tagged `name#H<k>`; every
// tag must appear at least twice and all occurrences are merged. Branch
// lengths `:<decimal>` become arc weights.
Network parse_enewick(std::string_view text,
                      Strictness strictness = Strictness::AlmostBinary);

struct DotOverlay {
  const Decomposition* decomposition = nullptr;
  const SubdivisionTree* tree = nullptr;
};

// Deterministic DOT text: vertices in id order, arcs in arc order. A
// decomposition overlay colors arcs per trail; a tree overlay bolds its arcs.
std::string export_dot(const Network& net, const DotOverlay& overlay = {});

// Shortest decimal that round-trips through parsing.
std::string format_weight(double w);

}  // namespace zigzag
