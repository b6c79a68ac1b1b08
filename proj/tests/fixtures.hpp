#pragma once

#include <vector>

#include "zigzag/network.hpp"

namespace fixtures {

// r -> x1, r -> x2
inline zigzag::Network cherry() {
  return zigzag::Network::from_arcs(
      {{"r", "x1", std::nullopt}, {"r", "x2", std::nullopt}},
      zigzag::Strictness::Binary);
}

// Balanced tree on four leaves.
inline zigzag::Network tree4() {
  return zigzag::Network::from_arcs({{"r", "a", std::nullopt},
                                     {"r", "b", std::nullopt},
                                     {"a", "x1", std::nullopt},
                                     {"a", "x2", std::nullopt},
                                     {"b", "x3", std::nullopt},
                                     {"b", "x4", std::nullopt}},
                                    zigzag::Strictness::Binary);
}

// One reticulation h fed by a and b; three leaves. Decomposes into one
// M-fence of size 4, one of size 2, and a single-arc N-fence; alpha = 2.
inline zigzag::Network ret1() {
  return zigzag::Network::from_arcs({{"r", "a", std::nullopt},
                                     {"r", "b", std::nullopt},
                                     {"a", "h", std::nullopt},
                                     {"b", "h", std::nullopt},
                                     {"a", "x1", std::nullopt},
                                     {"b", "x2", std::nullopt},
                                     {"h", "x3", std::nullopt}},
                                    zigzag::Strictness::Binary);
}

}  // namespace fixtures
