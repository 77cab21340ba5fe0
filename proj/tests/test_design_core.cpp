#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "equicycle/colouring.hpp"
#include "equicycle/cycle.hpp"
#include "equicycle/graph.hpp"
#include "equicycle/vertex.hpp"

using namespace equicycle;

namespace {

LabelledVertex r(long a, int part, long n = 9) {
  return LabelledVertex::rotational(a, part, n);
}

}  // namespace

TEST_CASE("vertex factories reduce labels into range") {
  CHECK(r(11, 0).a == 2);
  CHECK(r(-1, 1).a == 8);
  CHECK(LabelledVertex::blown(5, 9, 3, 7).a == 2);
  CHECK(LabelledVertex::blown(5, 9, 3, 7).b == 2);
  CHECK_THROWS_AS(LabelledVertex::plain(-3), std::invalid_argument);
}

TEST_CASE("vertex tokens") {
  CHECK(r(3, 0).str() == "3_0");
  CHECK(r(3, 1).str() == "3_1");
  CHECK(LabelledVertex::blown(2, 5, 3, 7).str() == "(2,5)");
  CHECK(LabelledVertex::plain(7).str() == "7");
  CHECK(LabelledVertex::infinity().str() == "inf");
}

TEST_CASE("vertex order: part-major rotational, infinity last") {
  std::vector<LabelledVertex> vs{LabelledVertex::infinity(), r(2, 1), r(0, 1),
                                 r(5, 0), r(1, 0)};
  std::sort(vs.begin(), vs.end());
  CHECK(vs[0] == r(1, 0));
  CHECK(vs[1] == r(5, 0));
  CHECK(vs[2] == r(0, 1));
  CHECK(vs[3] == r(2, 1));
  CHECK(vs[4].is_infinity());
}

TEST_CASE("mod_reduce lands in [0, m)") {
  CHECK(mod_reduce(-1, 7) == 6);
  CHECK(mod_reduce(14, 7) == 0);
  CHECK(mod_reduce(5, 7) == 5);
  CHECK_THROWS_AS(mod_reduce(3, 0), std::invalid_argument);
}

TEST_CASE("cycles reject degenerate input") {
  CHECK_THROWS_AS(Cycle({r(0, 0), r(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({r(0, 0), r(1, 0), r(0, 0)}), std::invalid_argument);
}

TEST_CASE("cycle equality ignores rotation and reflection") {
  Cycle c({r(0, 0), r(1, 0), r(2, 0), r(3, 0)});
  Cycle rotated({r(2, 0), r(3, 0), r(0, 0), r(1, 0)});
  Cycle reflected({r(3, 0), r(2, 0), r(1, 0), r(0, 0)});
  Cycle other({r(0, 0), r(2, 0), r(1, 0), r(3, 0)});
  CHECK(c == rotated);
  CHECK(c == reflected);
  CHECK_FALSE(c == other);
  CHECK(c.canonical_form().vertices() == rotated.canonical_form().vertices());
}

TEST_CASE("canonical traversal starts at the least vertex") {
  Cycle c({r(4, 0), r(2, 0), r(7, 0)});
  std::vector<LabelledVertex> canon = c.canonical_form().vertices();
  CHECK(canon.front() == r(2, 0));
  CHECK(canon[1] == r(4, 0));  // lesser of the two neighbours comes second
}

TEST_CASE("for_each_edge includes the closing edge") {
  Cycle c({r(0, 0), r(1, 0), r(2, 0)});
  int edges = 0;
  bool closing_seen = false;
  c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
    ++edges;
    if ((u == r(2, 0) && v == r(0, 0)) || (u == r(0, 0) && v == r(2, 0)))
      closing_seen = true;
  });
  CHECK(edges == 3);
  CHECK(closing_seen);
}

TEST_CASE("concatenate_paths merges junction vertices once") {
  Path a{r(0, 0), r(1, 0), r(2, 0)};
  Path b{r(2, 0), r(3, 0)};
  Path joined = concatenate_paths({a, {}, b});
  REQUIRE(joined.size() == 4);
  CHECK(joined[2] == r(2, 0));
  CHECK(joined[3] == r(3, 0));
  CHECK_THROWS_AS(concatenate_paths({a, {r(5, 0), r(6, 0)}}),
                  std::invalid_argument);
}

TEST_CASE("close_path refuses an immediately re-entrant path") {
  CHECK_THROWS_AS(close_path({r(0, 0), r(1, 0), r(2, 0), r(0, 0)}),
                  std::invalid_argument);
  Cycle ok = close_path({r(0, 0), r(1, 0), r(2, 0)});
  CHECK(ok.length() == 3);
}

TEST_CASE("colouring class sizes") {
  Colouring phi;
  phi.set(r(0, 0), Colour::Red);
  phi.set(r(1, 0), Colour::Blue);
  phi.set(r(2, 0), Colour::Blue);
  phi.set(r(0, 0), Colour::Red);  // overwrite, not a new entry
  auto [red, blue] = phi.class_sizes();
  CHECK(red == 1);
  CHECK(blue == 2);
  CHECK(phi.at(r(2, 0)) == Colour::Blue);
  CHECK_FALSE(phi.defined(r(5, 0)));
}

// --------------------------------------------------------------------------
// host graphs
// --------------------------------------------------------------------------

TEST_CASE("edge counts per host family") {
  CHECK(GraphSpec::complete_rotational(9).vertex_count() == 19);
  CHECK(GraphSpec::complete_rotational(9).edge_count() == 171);
  CHECK(GraphSpec::complete_blown(3, 7, true).edge_count() == 231);
  CHECK(GraphSpec::complete_blown(3, 7, false).edge_count() == 210);
  CHECK(GraphSpec::complete_plain(7).edge_count() == 21);
  GraphSpec minus = GraphSpec::complete_minus_factor(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(minus.edge_count() == 12);
  CHECK(GraphSpec::blowup(3, 7).edge_count() == 147);
  CHECK(GraphSpec::cayley_circulant(9, {3, 4}).edge_count() == 18);
  // half-orbit generator: d = v/2 contributes v/2 edges
  CHECK(GraphSpec::cayley_circulant(8, {4}).edge_count() == 4);
  // one translation orbit of s*l edges per listed delta
  CHECK(GraphSpec::cayley_blown(3, 9, {3, 4, 5, 6}).edge_count() == 108);
}

TEST_CASE("edge enumeration matches the declared count and is sorted") {
  for (const GraphSpec& g :
       {GraphSpec::complete_rotational(7), GraphSpec::blowup(3, 7),
        GraphSpec::cayley_blown(3, 9, {3, 4, 5, 6}),
        GraphSpec::complete_minus_factor(6, {{0, 1}, {2, 3}, {4, 5}})}) {
    std::vector<Edge> edges = g.edges();
    CHECK(static_cast<long>(edges.size()) == g.edge_count());
    std::set<Edge> dedup(edges.begin(), edges.end());
    CHECK(dedup.size() == edges.size());
    for (const Edge& e : edges) CHECK(e.first < e.second);
  }
}

TEST_CASE("blowup hosts join full parts") {
  GraphSpec g = GraphSpec::blowup(3, 7);
  std::set<Edge> edges;
  for (const Edge& e : g.edges()) edges.insert(e);
  // adjacent parts: every cross pair present
  CHECK(edges.count(make_edge(LabelledVertex::blown(0, 3, 3, 7),
                              LabelledVertex::blown(1, 6, 3, 7))) == 1);
  // same part: never
  CHECK(edges.count(make_edge(LabelledVertex::blown(1, 0, 3, 7),
                              LabelledVertex::blown(1, 1, 3, 7))) == 0);
}

TEST_CASE("graph descriptors round-trip through parse") {
  for (const GraphSpec& g :
       {GraphSpec::complete_rotational(17), GraphSpec::complete_blown(6, 9, true),
        GraphSpec::complete_blown(5, 7, false), GraphSpec::complete_plain(12),
        GraphSpec::complete_minus_factor(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
        GraphSpec::blowup(5, 11), GraphSpec::cayley_circulant(11, {3, 4, 5}),
        GraphSpec::cayley_blown(5, 9, {0, 1, 2, 7, 8})}) {
    CAPTURE(g.str());
    CHECK(GraphSpec::parse(g.str()) == g);
  }
  CHECK_THROWS_AS(GraphSpec::parse("complete-rotational:x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec::parse("unheard-of:3"), std::invalid_argument);
}

TEST_CASE("blown factories require odd s >= 3 where development needs it") {
  CHECK_THROWS_AS(GraphSpec::blowup(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(GraphSpec::cayley_blown(1, 7, {1}), std::invalid_argument);
  // complete_blown carries s = 1 hosts (single-part + infinity is legal)
  CHECK(GraphSpec::complete_blown(1, 7, false).vertex_count() == 7);
}

TEST_CASE("make_edge orients endpoints") {
  Edge e = make_edge(r(5, 0), r(1, 0));
  CHECK(e.first == r(1, 0));
  CHECK(e.second == r(5, 0));
}
