#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/generators.hpp"
#include "extremal/io.hpp"
#include "extremal/peel.hpp"

using namespace extremal;

namespace {

// Oracle: delete low-degree vertices one at a time in a random order.
std::set<int> core_by_random_order(const Graph& g, int t, std::uint64_t seed) {
  std::set<int> alive;
  for (int v = 0; v < g.num_vertices(); ++v) alive.insert(v);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<int> low;
    for (int v : alive) {
      int d = 0;
      for (int u : g.neighbors(v)) d += alive.count(u);
      if (d < t) low.push_back(v);
    }
    if (low.empty()) break;
    alive.erase(low[rng() % low.size()]);
  }
  return alive;
}

Graph triangle_with_pendant() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("peel_to_min_degree examples") {
  CHECK(peel_to_min_degree(complete_graph(3), 2).num_edges() == 3);
  CHECK(peel_to_min_degree(Graph(3, {{0, 1}, {1, 2}}), 2).num_vertices() == 0);
  Graph core = peel_to_min_degree(triangle_with_pendant(), 2);
  CHECK(core.num_vertices() == 3);
  CHECK(core.num_edges() == 3);
  CHECK(core.origin() == std::vector<int>{0, 1, 2});
}

TEST_CASE("peel_bipartite examples") {
  CHECK(peel_bipartite(complete_bipartite(2, 3), 1, 1).num_edges() == 6);
  BipartiteGraph lone(3, 3, {{1, 4}});
  BipartiteGraph peeled = peel_bipartite(lone, 1, 1);
  CHECK(peeled.m() == 1);
  CHECK(peeled.n() == 1);
  CHECK(peeled.num_edges() == 1);
  CHECK(peel_bipartite(complete_bipartite(1, 3), 2, 1).num_edges() == 3);
  CHECK(peel_bipartite(complete_bipartite(1, 3), make_rational(7, 2), 1).num_vertices() == 0);
}

TEST_CASE("half_regularize examples") {
  CHECK(half_regularize(complete_bipartite(2, 3), Side::N, 2).num_edges() == 6);
  BipartiteGraph h = half_regularize(complete_bipartite(3, 3), Side::N, 1);
  CHECK(h.num_edges() == 3);
  for (int v = 3; v < 6; ++v) CHECK(h.degree(v) == 1);
  CHECK_THROWS_AS(half_regularize(complete_bipartite(1, 3), Side::M, 4), PreconditionViolated);
}

TEST_CASE("almost regularity examples") {
  CHECK(almost_regularity(complete_bipartite(1, 3).graph()) == 3);
  CHECK(almost_regularity(cycle_graph(6)) == 1);
  CHECK(almost_regularity(triangle_with_pendant()) == 3);
  CHECK_THROWS_AS(almost_regularity(Graph(0)), EmptyGraph);
  CHECK_THROWS_AS(almost_regularity(Graph(2)), EmptyGraph);
  CHECK(almost_biregularity(complete_bipartite(2, 3)) == std::pair<Rational, Rational>(1, 1));
  // one N-vertex of degree 2 and two M-vertices of degree 1: each side is regular
  CHECK(almost_biregularity(bipartite_path(2)) == std::pair<Rational, Rational>(1, 1));
  CHECK(almost_biregularity(bipartite_path(1)) == std::pair<Rational, Rational>(1, 1));
}

TEST_CASE("edge list parser is strict") {
  AnyGraph g = parse_edge_list_string("# comment\np 2 2\n0 2\n1 3\n0 3\n");
  REQUIRE(std::holds_alternative<BipartiteGraph>(g));
  CHECK(std::get<BipartiteGraph>(g).num_edges() == 3);
  CHECK(std::holds_alternative<Graph>(parse_edge_list_string("g 3\n0 1\n1 2\n")));
  CHECK_THROWS_AS(parse_edge_list_string("p 2 2\n0 2\n2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("p 2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("p 2 2\n0 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("g 2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("x 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string(""), ParseError);
}

TEST_CASE("edge list round trip") {
  BipartiteGraph g = random_bipartite(7, 9, 0.4, 3);
  std::ostringstream out;
  write_edge_list(out, g, {"seed 3"});
  auto back = std::get<BipartiteGraph>(parse_edge_list_string(out.str()));
  CHECK(back.edges() == g.edges());
  CHECK(back.m() == 7);
}

TEST_CASE("property: core is independent of deletion order") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(18, 0.25, seed);
    int t = 1 + static_cast<int>(seed % 4);
    Graph core = peel_to_min_degree(g, t);
    std::set<int> got(core.origin().begin(), core.origin().end());
    CHECK(got == core_by_random_order(g, t, seed * 7 + 1));
    CHECK(got == core_by_random_order(g, t, seed * 7 + 2));
    CHECK(peel_to_min_degree(core, t).num_vertices() == core.num_vertices());
  }
}

TEST_CASE("property: half_regularize degree profile and conservation") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    BipartiteGraph g = random_bipartite(10, 14, 0.5, seed);
    DegreeStats s = degree_stats(g);
    CHECK(s.avg_M * s.m == Rational(s.edges));
    CHECK(s.avg_N * s.n == Rational(s.edges));
    if (s.min_N == 0) continue;
    for (auto shuffle : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{seed}}) {
      BipartiteGraph h = half_regularize(g, Side::N, s.min_N, shuffle);
      for (int v = g.m(); v < g.num_vertices(); ++v) CHECK(h.degree(v) == s.min_N);
      for (auto [u, v] : h.edges()) CHECK(g.has_edge(u, v));
    }
  }
  for (int m = 1; m < 5; ++m)
    for (int n = 1; n < 5; ++n)
      CHECK(almost_biregularity(complete_bipartite(m, n)) == std::pair<Rational, Rational>(1, 1));
}
