#include <random>
#include <algorithm>
#include <set>

#include "doctest.h"
#include "extremal/errors.hpp"
#include "extremal/generators.hpp"
#include "extremal/peel.hpp"
#include "extremal/regularize.hpp"

using namespace extremal;

namespace {

// Oracle: all nonempty S within A (as M-part) with |N(S)| <= |S|, by enumeration.
std::vector<std::vector<int>> tight_subsets(const BipartiteGraph& g, const std::vector<int>& within) {
  std::vector<std::vector<int>> out;
  int k = static_cast<int>(within.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::set<int> nb;
    std::vector<int> S;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        S.push_back(within[i]);
        for (int u : g.neighbors(within[i])) nb.insert(u);
      }
    if (nb.size() <= S.size()) out.push_back(S);
  }
  return out;
}

void check_tight_result(const BipartiteGraph& g, const TightMatching& t) {
  REQUIRE(!t.A1.empty());
  CHECK(t.A1.size() == t.B1.size());
  CHECK(t.matching.size() == t.A1.size());
  std::set<int> B1(t.B1.begin(), t.B1.end()), usedA, usedB;
  for (int a : t.A1)
    for (int b : g.neighbors(a)) CHECK(B1.count(b) == 1);
  for (auto [a, b] : t.matching) {
    CHECK(g.has_edge(a, b));
    CHECK(usedA.insert(a).second);
    CHECK(usedB.insert(b).second);
  }
}

BipartiteGraph random_half_regular(int na, int nb, int d, std::uint64_t seed) {
  BipartiteGraph g = random_bipartite(na, nb, 0.7, seed);
  std::vector<Edge> es;
  std::mt19937_64 rng(seed);
  for (int a = 0; a < na; ++a) {
    std::vector<int> pool(nb);
    for (int b = 0; b < nb; ++b) pool[b] = na + b;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int k = 0; k < d; ++k) es.emplace_back(a, pool[k]);
  }
  (void)g;
  return BipartiteGraph(na, nb, es);
}

}  // namespace

TEST_CASE("tight_matching examples") {
  TightMatching k22 = tight_matching(complete_bipartite(2, 2), Side::M, 2);
  CHECK(k22.A1 == std::vector<int>{0, 1});
  CHECK(k22.B1 == std::vector<int>{2, 3});

  BipartiteGraph two(2, 2, {{0, 2}, {1, 3}});
  TightMatching t = tight_matching(two, Side::M, 1);
  CHECK(t.A1 == std::vector<int>{0});
  CHECK(t.B1 == std::vector<int>{2});

  TightMatching k32 = tight_matching(complete_bipartite(3, 2), Side::M, 2);
  CHECK(k32.A1.size() == 2);
  CHECK(k32.B1 == std::vector<int>{3, 4});
  check_tight_result(complete_bipartite(3, 2), k32);

  CHECK_THROWS_AS(tight_matching(complete_bipartite(2, 3), Side::M, 3), PreconditionViolated);
  CHECK_THROWS_AS(tight_matching(complete_bipartite(3, 2), Side::M, 1), PreconditionViolated);
  // A on the N side
  TightMatching flipped = tight_matching(complete_bipartite(2, 3), Side::N, 2);
  CHECK(flipped.A1.size() == 2);
  for (int a : flipped.A1) CHECK(a >= 2);
}

TEST_CASE("property: tight set is minimal by brute force") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int na = 2 + static_cast<int>(seed % 9), nb = 1 + static_cast<int>(seed % na);
    int d = 1 + static_cast<int>(seed / 9 % nb);
    BipartiteGraph g = random_half_regular(na, nb, d, seed);
    TightMatching t = tight_matching(g, Side::M, d);
    check_tight_result(g, t);
    for (const auto& S : tight_subsets(g, t.A1)) CHECK(S.size() == t.A1.size());
  }
}

TEST_CASE("matching_cascade examples and invariants") {
  auto one = matching_cascade(complete_bipartite(2, 2), Side::M, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 2);
  auto k44 = matching_cascade(complete_bipartite(4, 4), Side::M, 4);
  REQUIRE(k44.size() == 2);
  CHECK(k44[0].size() >= 4);
  CHECK(k44[1].size() >= 3);
  CHECK(matching_cascade(complete_bipartite(1, 1), Side::M, 1).at(0).size() == 1);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int nb = 4 + static_cast<int>(seed % 10), na = nb + static_cast<int>(seed % 5);
    int d = 1 + static_cast<int>(seed % nb);
    BipartiteGraph g = random_half_regular(na, nb, d, seed + 1000);
    auto ms = matching_cascade(g, Side::M, d);
    REQUIRE(static_cast<int>(ms.size()) == (d + 1) / 2);
    std::set<Edge> all;
    std::set<int> prev;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(static_cast<int>(ms[i].size()) >= d - static_cast<int>(i));
      std::set<int> verts;
      for (auto e : ms[i]) {
        CHECK(g.has_edge(e.first, e.second));
        CHECK(all.insert(e).second);
        CHECK(verts.insert(e.first).second);
        CHECK(verts.insert(e.second).second);
      }
      if (i > 0) CHECK(std::includes(prev.begin(), prev.end(), verts.begin(), verts.end()));
      prev = verts;
    }
  }
}

TEST_CASE("enhanced_regularize examples") {
  auto k4 = enhanced_regularize(complete_graph(4), 1, make_rational(1, 5));
  CHECK(k4.certificate.all_ok());
  CHECK(check_certificate(k4.certificate, k4.H));

  auto k3232 = enhanced_regularize(complete_bipartite(32, 32).graph(), 1, make_rational(1, 2));
  CHECK(k3232.certificate.all_ok());
  CHECK(check_certificate(k3232.certificate, k3232.H));
  for (auto [u, v] : k3232.H.edges())
    CHECK(complete_bipartite(32, 32).has_edge(k3232.H.origin()[u], k3232.H.origin()[v]));

  CHECK_THROWS_AS(enhanced_regularize(random_bipartite(20, 20, 0.05, 1).graph(), 1, make_rational(1, 2)),
                  PreconditionViolated);
  CHECK_THROWS_AS(enhanced_regularize(complete_graph(5), 1, 1), PreconditionViolated);
}

TEST_CASE("check_certificate detects tampering") {
  auto r = enhanced_regularize(complete_bipartite(16, 16).graph(), 1, make_rational(1, 2));
  REQUIRE(check_certificate(r.certificate, r.H));
  RegularizationCertificate bad = r.certificate;
  bad.edges += 1;
  CHECK_FALSE(check_certificate(bad, r.H));
  // remove all but one edge at vertex 0 of H: the ratio bound must fail
  std::vector<Edge> keep;
  bool first = true;
  for (auto [u, v] : r.H.edges()) {
    if (u == 0 || v == 0) {
      if (!first) continue;
      first = false;
    }
    keep.emplace_back(u, v);
  }
  Graph mutated = r.H.edge_subgraph(keep);
  CHECK_FALSE(check_certificate(r.certificate, mutated));
  RegularizationCertificate redo = r.certificate;
  redo.edges = mutated.num_edges();
  redo.min_degree = mutated.min_degree();
  redo.max_degree = mutated.max_degree();
  CHECK_FALSE(check_certificate(redo, mutated));
}

TEST_CASE("property: certificates hold on dense random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(40 + static_cast<int>(seed), 0.6, seed);
    auto r = enhanced_regularize(g, make_rational(1, 2), make_rational(1, 2));
    CHECK(r.certificate.all_ok());
    CHECK(check_certificate(r.certificate, r.H));
  }
}
