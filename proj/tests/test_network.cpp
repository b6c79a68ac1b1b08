#include "doctest.h"

#include "fixtures.hpp"
#include "zigzag/network.hpp"

using namespace zigzag;

namespace {

ErrorCode code_of(const std::vector<ArcSpec>& arcs,
                  Strictness s = Strictness::AlmostBinary) {
  try {
    Network::from_arcs(arcs, s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("vertex ids follow first appearance") {
  Network net = fixtures::ret1();
  CHECK(net.name(0) == "r");
  CHECK(net.name(1) == "a");
  CHECK(net.name(2) == "b");
  CHECK(net.name(3) == "h");
  CHECK(net.find_vertex("x3") == VertexId(6));
  CHECK(!net.find_vertex("nope"));
  CHECK(net.root() == 0);
  CHECK(net.vertex_count() == 7);
  CHECK(net.arc_count() == 7);
  CHECK(net.leaves().size() == 3);
  CHECK(net.is_strictly_binary());
}

TEST_CASE("degree accessors") {
  Network net = fixtures::ret1();
  VertexId h = *net.find_vertex("h");
  CHECK(net.in_degree(h) == 2);
  CHECK(net.out_degree(h) == 1);
  CHECK(net.is_reticulation(h));
  CHECK(net.in_arcs(h).size() == 2);
  CHECK(net.is_leaf(*net.find_vertex("x1")));
  CHECK(!net.is_leaf(h));
}

TEST_CASE("construction rejects malformed input") {
  CHECK(code_of({{"a", "a", std::nullopt}}) == ErrorCode::SelfLoop);
  CHECK(code_of({{"r", "a", std::nullopt}, {"r", "a", std::nullopt}}) ==
        ErrorCode::DuplicateArc);
  CHECK(code_of({{"a", "b", std::nullopt},
                 {"b", "c", std::nullopt},
                 {"c", "a", std::nullopt}}) == ErrorCode::NoRoot);
  CHECK(code_of({{"r", "a", std::nullopt},
                 {"s", "a", std::nullopt},
                 {"a", "x", std::nullopt}}) == ErrorCode::MultipleRoots);
  CHECK(code_of({{"r", "x", -1.0}}) == ErrorCode::NegativeWeight);
  CHECK(code_of({{"r", "a", std::nullopt},
                 {"r", "b", std::nullopt},
                 {"r", "c", std::nullopt}}) == ErrorCode::DegreeViolation);
  // Cycle below the root.
  CHECK(code_of({{"r", "a", std::nullopt},
                 {"a", "b", std::nullopt},
                 {"b", "c", std::nullopt},
                 {"c", "a", std::nullopt},
                 {"a", "x", std::nullopt}}) == ErrorCode::CycleDetected);
  CHECK(code_of({}) == ErrorCode::NoLeaves);
}

TEST_CASE("strict mode rejects almost-binary degrees") {
  // Vertex with in 1, out 1 is fine almost-binary, not strictly binary.
  std::vector<ArcSpec> arcs = {{"r", "a", std::nullopt},
                               {"a", "x1", std::nullopt},
                               {"r", "x2", std::nullopt}};
  Network net = Network::from_arcs(arcs, Strictness::AlmostBinary);
  CHECK(!net.is_strictly_binary());
  CHECK(code_of(arcs, Strictness::Binary) == ErrorCode::DegreeViolation);
}

TEST_CASE("classify_vertex") {
  Network net = fixtures::ret1();
  CHECK(classify_vertex(net, net.root()).category == VertexCategory::Root);
  VertexId h = *net.find_vertex("h");
  CHECK(classify_vertex(net, h).category == VertexCategory::Reticulation);
  VertexId a = *net.find_vertex("a");
  auto ka = classify_vertex(net, a);
  CHECK(ka.category == VertexCategory::TreeVertex);
  CHECK(!ka.omnian);
  CHECK(classify_vertex(net, *net.find_vertex("x1")).category ==
        VertexCategory::Leaf);
}

TEST_CASE("omnian detection") {
  // b's only child is the reticulation h.
  Network net = Network::from_arcs({{"r", "a", std::nullopt},
                                    {"r", "b", std::nullopt},
                                    {"a", "h", std::nullopt},
                                    {"b", "h", std::nullopt},
                                    {"a", "x1", std::nullopt},
                                    {"h", "x2", std::nullopt}},
                                   Strictness::AlmostBinary);
  CHECK(classify_vertex(net, *net.find_vertex("b")).omnian);
  CHECK(!classify_vertex(net, *net.find_vertex("a")).omnian);
}

TEST_CASE("weights are preserved") {
  Network net = Network::from_arcs({{"r", "x1", 2.5}, {"r", "x2", std::nullopt}},
                                   Strictness::Binary);
  CHECK(net.arc(0).has_weight);
  CHECK(net.arc(0).weight == doctest::Approx(2.5));
  CHECK(!net.arc(1).has_weight);
}
