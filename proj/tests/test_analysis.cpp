#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "zigzag/analysis.hpp"
#include "zigzag/generator.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/rng.hpp"

using namespace zigzag;

namespace {

std::set<std::vector<ArcId>> enumerate_all(const Network& net,
                                           const Decomposition& d) {
  std::set<std::vector<ArcId>> out;
  EnumerationCursor cursor(net, d);
  SubdivisionTree t;
  while (cursor.next(t)) out.insert(t.arcs);
  return out;
}

}  // namespace

TEST_CASE("trees have exactly one subdivision tree: themselves") {
  Network net = fixtures::tree4();
  Decomposition d = decompose(net);
  CHECK(is_tree_based(d));
  CHECK(count(d) == 1);
  SubdivisionTree t = find_subdivision_tree(net, d);
  CHECK(t.arcs.size() == net.arc_count());
  CHECK(verify_subdivision_tree(net, t.arcs));
}

TEST_CASE("single-reticulation network has two subdivision trees") {
  Network net = fixtures::ret1();
  Decomposition d = decompose(net);
  CHECK(count(d) == 2);
  auto all = enumerate_all(net, d);
  CHECK(all.size() == 2);
  for (const auto& arcs : all) {
    CHECK(verify_subdivision_tree(net, arcs));
    CHECK(is_admissible_global(net, arcs));
  }
  // The two trees differ exactly in which parent feeds h.
  ArcId ah = 2, bh = 3;
  std::set<std::vector<ArcId>> expected;
  for (ArcId keep : {ah, bh}) {
    std::vector<ArcId> arcs;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      if (a == ah || a == bh) continue;
      arcs.push_back(a);
    }
    arcs.push_back(keep);
    std::sort(arcs.begin(), arcs.end());
    expected.insert(arcs);
  }
  CHECK(all == expected);
}

TEST_CASE("non-tree-based behavior") {
  Network net = generator::gadget_with_profile({{TrailKind::MFence, 2},
                                                {TrailKind::WFence, 2},
                                                {TrailKind::NFence, 1}});
  Decomposition d = decompose(net);
  CHECK(!is_tree_based(d));
  CHECK(count(d) == 0);
  CHECK(deviation(d).delta == 1);

  CHECK_THROWS_AS(find_subdivision_tree(net, d), NotTreeBased);
  try {
    find_subdivision_tree(net, d);
  } catch (const NotTreeBased& e) {
    REQUIRE(e.witnesses().size() == 1);
    CHECK(d.trails[e.witnesses()[0]].kind == TrailKind::WFence);
  }

  // Empty stream, not an error.
  EnumerationCursor cursor(net, d);
  SubdivisionTree t;
  CHECK(!cursor.next(t));
  CHECK(cursor.exhausted());

  std::vector<double> w(net.arc_count(), 1.0);
  CHECK_THROWS_AS(optimize(net, d, w, Direction::Maximize), NotTreeBased);
  CHECK_THROWS_AS(sample_uniform(net, d, 1, 1), NotTreeBased);
}

TEST_CASE("enumeration order: last trail varies fastest") {
  Network net = generator::gadget_with_profile({{TrailKind::MFence, 2},
                                                {TrailKind::MFence, 4},
                                                {TrailKind::MFence, 6},
                                                {TrailKind::NFence, 1},
                                                {TrailKind::NFence, 1}});
  Decomposition d = decompose(net);
  REQUIRE(count(d) == 6);

  std::vector<std::uint32_t> radix;
  for (const Trail& t : d.trails) {
    radix.push_back(std::uint32_t(family_size(t)));
  }
  EnumerationCursor cursor(net, d);
  SubdivisionTree t;
  std::vector<std::uint32_t> expect(radix.size(), 0);
  std::size_t produced = 0;
  while (cursor.next(t)) {
    CHECK(t.selection == expect);
    ++produced;
    for (std::size_t i = expect.size(); i-- > 0;) {
      if (++expect[i] < radix[i]) break;
      expect[i] = 0;
    }
  }
  CHECK(produced == 6);
}

TEST_CASE("enumerate_k prefix and bound") {
  Network net = fixtures::ret1();
  Decomposition d = decompose(net);
  auto two = enumerate_k(net, d, 2);
  CHECK(two.size() == 2);
  auto one = enumerate_k(net, d, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].arcs == two[0].arcs);
  CHECK_THROWS_AS(enumerate_k(net, d, 3), Error);
}

TEST_CASE("deviation equals W-fence count and the matching baseline") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Network net = generator::random_network(4, 2, seed);
    Decomposition d = decompose(net);
    DeviationReport rep = deviation(d);
    CHECK(rep.delta == d.count(TrailKind::WFence));
    CHECK(rep.delta == oracle::deviation_via_matching(net));
    CHECK(rep.ell() == rep.delta);
    CHECK(rep.p() == rep.delta);
  }
}

TEST_CASE("enumeration matches the brute-force oracle on random networks") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Network net = generator::random_network(3 + seed % 3, seed % 3, 1000 + seed);
    if (net.arc_count() > 16) continue;
    Decomposition d = decompose(net);
    auto enumerated = enumerate_all(net, d);
    auto oracle_sets = oracle::brute_force_admissible_sets(net);
    std::set<std::vector<ArcId>> expected(oracle_sets.begin(),
                                          oracle_sets.end());
    CHECK(enumerated == expected);
    CHECK(count(d) == mpz_class((unsigned long)expected.size()));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("optimize agrees with exhaustive search") {
  SplitMix64 rng(99);
  int done = 0;
  for (std::uint64_t seed = 0; seed < 40 && done < 25; ++seed) {
    Network net = generator::random_network(4, seed % 3, 500 + seed);
    Decomposition d = decompose(net);
    if (!is_tree_based(d)) continue;
    std::vector<double> w(net.arc_count());
    for (double& x : w) x = rng.unit();

    for (Direction dir : {Direction::Maximize, Direction::Minimize}) {
      OptimizeResult res = optimize(net, d, w, dir);
      double check_score = 0.0;
      for (ArcId a : res.tree.arcs) check_score += w[a];
      CHECK(res.score == doctest::Approx(check_score).epsilon(1e-12));

      bool first = true;
      double best = 0.0;
      EnumerationCursor cursor(net, d);
      SubdivisionTree t;
      while (cursor.next(t)) {
        double s = 0.0;
        for (ArcId a : t.arcs) s += w[a];
        bool better = dir == Direction::Maximize ? s > best : s < best;
        if (first || better) best = s;
        first = false;
      }
      CHECK(res.score == doctest::Approx(best).epsilon(1e-9));
    }
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("optimize validates the weight vector length") {
  Network net = fixtures::ret1();
  Decomposition d = decompose(net);
  std::vector<double> w(net.arc_count() - 1, 0.0);
  CHECK_THROWS_AS(optimize(net, d, w, Direction::Maximize), Error);
}

TEST_CASE("sampling is deterministic per seed and emits valid trees") {
  Network net = fixtures::ret1();
  Decomposition d = decompose(net);
  auto a = sample_uniform(net, d, 7, 20);
  auto b = sample_uniform(net, d, 7, 20);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].arcs == b[i].arcs);
    CHECK(verify_subdivision_tree(net, a[i].arcs));
  }
  auto c = sample_uniform(net, d, 8, 20);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].arcs != c[i].arcs) all_equal = false;
  }
  CHECK(!all_equal);
}

TEST_CASE("path partition covers V with |X| leaf-terminated paths") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Network net = generator::random_network(5, seed % 4, 300 + seed);
    Decomposition d = decompose(net);
    if (!is_tree_based(d)) continue;
    SubdivisionTree t = find_subdivision_tree(net, d);
    PathPartition paths = path_partition_from_tree(net, t);
    CHECK(paths.size() == net.leaves().size());
    std::vector<int> seen(net.vertex_count(), 0);
    for (const auto& path : paths) {
      REQUIRE(!path.empty());
      CHECK(net.is_leaf(path.back()));
      for (VertexId v : path) seen[v]++;
    }
    CHECK(std::all_of(seen.begin(), seen.end(),
                      [](int c) { return c == 1; }));
  }
}

TEST_CASE("verify_subdivision_tree rejects wrong arc sets") {
  Network net = fixtures::ret1();
  Decomposition d = decompose(net);
  SubdivisionTree t = find_subdivision_tree(net, d);

  // Both reticulation arcs present: too many arcs.
  std::vector<ArcId> all(net.arc_count());
  std::iota(all.begin(), all.end(), 0);
  CHECK(!verify_subdivision_tree(net, all));

  // Right cardinality, but a leaf is cut off.
  std::vector<ArcId> broken = t.arcs;
  for (auto& a : broken) {
    if (net.is_leaf(net.arc(a).head)) {
      // swap a leaf arc for the unused reticulation arc
      for (ArcId cand = 0; cand < net.arc_count(); ++cand) {
        if (std::find(t.arcs.begin(), t.arcs.end(), cand) == t.arcs.end()) {
          a = cand;
          break;
        }
      }
      break;
    }
  }
  CHECK(!verify_subdivision_tree(net, broken));
  CHECK_THROWS_AS(path_partition_from_tree(net, SubdivisionTree{broken, {}}),
                  Error);
}
