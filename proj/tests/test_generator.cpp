#include "doctest.h"

#include <map>

#include "zigzag/analysis.hpp"
#include "zigzag/generator.hpp"
#include "zigzag/parse_io.hpp"

using namespace zigzag;
using generator::Profile;

namespace {

std::map<std::pair<TrailKind, std::size_t>, std::size_t> profile_of(
    const Network& net) {
  std::map<std::pair<TrailKind, std::size_t>, std::size_t> got;
  for (const Trail& t : decompose(net).trails) {
    got[{t.kind, t.size()}]++;
  }
  return got;
}

}  // namespace

TEST_CASE("random networks satisfy the binary identities") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::size_t n = 2 + seed % 7;
    std::size_t r = seed % 4;
    Network net = generator::random_network(n, r, seed);
    CHECK(net.is_strictly_binary());
    CHECK(net.leaves().size() == n);
    std::size_t rets = 0;
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
      if (net.is_reticulation(v)) ++rets;
    }
    CHECK(rets == r);
    CHECK(net.vertex_count() == 2 * n + 2 * r - 1);
    CHECK(net.arc_count() == 2 * n + 3 * r - 2);
  }
}

TEST_CASE("random generation is deterministic per seed") {
  Network a = generator::random_network(6, 3, 123);
  Network b = generator::random_network(6, 3, 123);
  CHECK(write_edge_list(a) == write_edge_list(b));
  Network c = generator::random_network(6, 3, 124);
  CHECK(write_edge_list(a) != write_edge_list(c));
}

TEST_CASE("cherry and edge parameters") {
  Network cherry = generator::random_network(2, 0, 0);
  CHECK(cherry.arc_count() == 2);
  CHECK(cherry.leaves().size() == 2);

  Network single = generator::random_network(1, 0, 0);
  CHECK(single.arc_count() == 1);

  CHECK_THROWS_AS(generator::random_network(1, 1, 0), Error);
  CHECK_THROWS_AS(generator::random_network(0, 0, 0), Error);
}

TEST_CASE("gadgets realize their requested profiles") {
  std::vector<Profile> profiles = {
      {{TrailKind::MFence, 2}},
      {{TrailKind::MFence, 2}, {TrailKind::NFence, 1}},
      {{TrailKind::MFence, 2},
       {TrailKind::MFence, 4},
       {TrailKind::NFence, 3},
       {TrailKind::NFence, 1}},
      {{TrailKind::MFence, 2},
       {TrailKind::WFence, 2},
       {TrailKind::NFence, 1}},
      {{TrailKind::MFence, 2},
       {TrailKind::MFence, 2},
       {TrailKind::Crown, 4},
       {TrailKind::NFence, 1},
       {TrailKind::NFence, 1}},
      {{TrailKind::MFence, 2},
       {TrailKind::MFence, 2},
       {TrailKind::MFence, 4},
       {TrailKind::MFence, 6},
       {TrailKind::NFence, 1},
       {TrailKind::NFence, 1}},
  };
  for (const Profile& p : profiles) {
    Network net = generator::gadget_with_profile(p);
    std::map<std::pair<TrailKind, std::size_t>, std::size_t> want;
    for (auto [kind, size] : p) want[{kind, size}]++;
    CHECK(profile_of(net) == want);
  }
}

TEST_CASE("unrealizable profiles are rejected") {
  CHECK_THROWS_AS(generator::gadget_with_profile({}), Error);
  // A lone W-fence leaves its reticulation with no out-arc.
  CHECK_THROWS_AS(
      generator::gadget_with_profile({{TrailKind::MFence, 2},
                                      {TrailKind::WFence, 2}}),
      Error);
  // Nothing can be placed first: every trail needs several feeds.
  CHECK_THROWS_AS(generator::gadget_with_profile({{TrailKind::MFence, 6}}),
                  Error);
  // Bad sizes.
  CHECK_THROWS_AS(generator::gadget_with_profile({{TrailKind::NFence, 2}}),
                  Error);
  CHECK_THROWS_AS(generator::gadget_with_profile({{TrailKind::Crown, 2}}),
                  Error);
}

TEST_CASE("attach_leaf splits a W-fence into two N-fences") {
  Network net = generator::gadget_with_profile({{TrailKind::MFence, 2},
                                                {TrailKind::WFence, 2},
                                                {TrailKind::NFence, 1}});
  Decomposition d = decompose(net);
  REQUIRE(d.count(TrailKind::WFence) == 1);
  const Trail& w = d.trails[w_fence_indices(d)[0]];

  Network fixed = generator::attach_leaf(net, w.arcs[0]);
  Decomposition d2 = decompose(fixed);
  CHECK(d2.count(TrailKind::WFence) == 0);
  CHECK(is_tree_based(d2));
  CHECK(fixed.leaves().size() == net.leaves().size() + 1);
  CHECK(fixed.arc_count() == net.arc_count() + 2);
}

TEST_CASE("attach_leaf on an N-fence arc keeps the deviation") {
  Network net = generator::gadget_with_profile({{TrailKind::MFence, 2},
                                                {TrailKind::WFence, 2},
                                                {TrailKind::NFence, 1}});
  Decomposition d = decompose(net);
  std::size_t before = deviation(d).delta;
  ArcId nf_arc = 0;
  for (const Trail& t : d.trails) {
    if (t.kind == TrailKind::NFence) nf_arc = t.arcs[0];
  }
  Network after = generator::attach_leaf(net, nf_arc);
  CHECK(deviation(decompose(after)).delta == before);
}

TEST_CASE("attach_leaf preserves weights and validates the arc id") {
  Network net = Network::from_arcs({{"r", "x1", 2.0}, {"r", "x2", std::nullopt}},
                                   Strictness::Binary);
  CHECK_THROWS_AS(generator::attach_leaf(net, 5), Error);
  Network out = generator::attach_leaf(net, 0);
  CHECK(out.arc(0).has_weight);
  CHECK(out.arc(0).weight == doctest::Approx(2.0));
  CHECK(out.leaves().size() == 3);
}
