#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "extremal/biregularize.hpp"
#include "extremal/errors.hpp"
#include "extremal/generators.hpp"
#include "extremal/peel.hpp"

using namespace extremal;

namespace {

const Rational kHalf = make_rational(1, 2);

void check_roof(const BipartiteGraph& g, const Roof& r) {
  REQUIRE(static_cast<int>(r.assign.size()) == g.n());
  std::vector<int> load(g.m(), 0);
  for (auto [x, y] : r.edges()) {
    CHECK(g.has_edge(x, y));
    ++load[x];
  }
  int mx = 0;
  for (int l : load) mx = std::max(mx, l);
  CHECK(mx == r.max_load);
}

BipartiteGraph random_no_isolated_N(int m, int n, double p, std::uint64_t seed) {
  BipartiteGraph g = random_bipartite(m, n, p, seed);
  std::vector<Edge> es = g.edges();
  for (int y = m; y < m + n; ++y)
    if (g.degree(y) == 0) es.emplace_back(static_cast<int>((seed + y) % m), y);
  return BipartiteGraph(m, n, es);
}

}  // namespace

TEST_CASE("min_roof and oracle examples") {
  CHECK(min_roof(complete_bipartite(1, 3)).max_load == 3);
  CHECK(roof_bottleneck_oracle(complete_bipartite(1, 3)) == 3);
  CHECK(min_roof(even_cycle(3)).max_load == 1);
  CHECK(roof_bottleneck_oracle(even_cycle(3)) == 1);
  CHECK(min_roof(complete_bipartite(2, 3)).max_load == 2);
  CHECK(roof_bottleneck_oracle(complete_bipartite(2, 3)) == 2);
  CHECK_THROWS_AS(min_roof(BipartiteGraph(1, 2, {{0, 1}})), PreconditionViolated);
  CHECK_THROWS_AS(roof_bottleneck_oracle(complete_bipartite(2, 21)), TooLarge);
}

TEST_CASE("property: min_roof matches the subset oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int m = 1 + static_cast<int>(seed % 7), n = 1 + static_cast<int>(seed * 7 % 13);
    BipartiteGraph g = random_no_isolated_N(m, n, 0.15 + 0.05 * (seed % 8), seed);
    Roof r = min_roof(g);
    check_roof(g, r);
    CHECK(r.max_load == roof_bottleneck_oracle(g));
  }
}

TEST_CASE("one_side_regularize examples") {
  OneSideResult k88 = one_side_regularize(complete_bipartite(8, 8), 1, kHalf, kHalf);
  CHECK(k88.edge_ok);
  CHECK(k88.avg_degree_ok);
  CHECK(k88.regular_side == Side::N);
  CHECK(k88.degree == 2);
  for (int v = k88.graph.m(); v < k88.graph.num_vertices(); ++v) CHECK(k88.graph.degree(v) == 2);

  CHECK_THROWS_AS(one_side_regularize(complete_bipartite(4, 4), 1, kHalf, kHalf), PreconditionViolated);

  // delta = 8 >= d/4 = 2.4: first branch keeps ceil(2.4) = 3 edges per N-vertex
  OneSideResult k812 = one_side_regularize(complete_bipartite(8, 12), 1, kHalf, kHalf);
  CHECK(k812.degree == 3);
  CHECK(k812.graph.n() == 12);
  CHECK(k812.graph.num_edges() == 36);
}

TEST_CASE("property: one_side_regularize claims on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    BipartiteGraph g = random_bipartite(20 + static_cast<int>(seed % 11), 40, 0.45 + 0.01 * (seed % 30), seed);
    OneSideResult r = one_side_regularize(g, kHalf, make_rational(3, 4), make_rational(3, 4));
    CHECK(r.edge_ok);
    CHECK(r.avg_degree_ok);
    int lo = r.graph.first(r.regular_side), hi = lo + r.graph.size(r.regular_side);
    for (int v = lo; v < hi; ++v) CHECK(r.graph.degree(v) == r.degree);
    CHECK(r.graph.size(r.regular_side) >= r.graph.size(other(r.regular_side)));
    for (auto [u, v] : r.graph.edges()) CHECK(g.has_edge(r.graph.origin()[u], r.graph.origin()[v]));
  }
}

TEST_CASE("half_to_biregular examples") {
  Rational a = make_rational(3, 5);
  auto r = half_to_biregular(complete_bipartite(4, 8), 1, a, a);
  CHECK(r.certificate.all_ok());
  CHECK(check_certificate(r.certificate, r.graph));
  CHECK(r.trace.thin_total * 2 < 4);
  CHECK_THROWS_AS(half_to_biregular(BipartiteGraph(4, 8, std::vector<Edge>{}), 1, a, a), PreconditionViolated);
  CHECK_THROWS_AS(half_to_biregular(complete_bipartite(8, 4), 1, a, a), PreconditionViolated);
}

TEST_CASE("property: half_to_biregular on random half-regular graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int m = 6 + static_cast<int>(seed % 10), n = m + static_cast<int>(seed % 17);
    int d = 2 + static_cast<int>(seed % (m - 1));
    BipartiteGraph g = half_regularize(random_bipartite(m, n, 0.9, seed), Side::N,
                                       std::min(d, degree_stats(random_bipartite(m, n, 0.9, seed)).min_N), seed);
    if (degree_stats(g).min_N == 0) continue;
    Rational a = make_rational(4, 5);
    Rational c = make_rational(1, 8);
    auto r = half_to_biregular(g, c, a, a);
    CHECK(r.certificate.all_ok());
    CHECK(check_certificate(r.certificate, r.graph));
    for (auto [u, v] : r.graph.edges()) CHECK(g.has_edge(r.graph.origin()[u], r.graph.origin()[v]));
  }
}

TEST_CASE("biregularize examples") {
  Rational a = make_rational(11, 20);
  auto r = biregularize(complete_bipartite(16, 64), 1, a, a);
  CHECK(r.certificate.all_ok());
  CHECK(check_certificate(r.certificate, r.graph));
  CHECK_THROWS_AS(biregularize(complete_bipartite(16, 64), 1, kHalf, kHalf), PreconditionViolated);
  CHECK_THROWS_AS(biregularize(random_bipartite(30, 60, 0.02, 5), 1, a, a), PreconditionViolated);

  auto f = biregularize_with_floor(complete_bipartite(16, 64), 1, a, a);
  CHECK(f.certificate.all_ok());
  CHECK(check_certificate(f.certificate, f.graph));
  CHECK_THROWS_AS(biregularize_with_floor(complete_bipartite(16, 64), 10, a, a), PreconditionViolated);

  BiregularizationCertificate bad = r.certificate;
  bad.out_edges += 1;
  CHECK_FALSE(check_certificate(bad, r.graph));
}

TEST_CASE("floor bound arithmetic for a balanced output") {
  Rational a = make_rational(3, 5);
  auto f = biregularize_with_floor(complete_bipartite(32, 32), 1, a, a);
  long double strict = (std::pow(2.0L, 0.2L) - 1) / std::pow(2.0L, 6 + 2 / 0.6L);
  long double lam = std::min(strict / 2, 1.0L / 256);
  long double mp = f.certificate.out_m, np = f.certificate.out_n;
  CHECK(f.certificate.edge_bound ==
        doctest::Approx(static_cast<double>(lam * (std::pow(mp, 0.6L) * std::pow(np, 0.6L) + mp + np))));
  // with m' = n' the bracket is (m')^{a+b} + 2m'
  CHECK(std::pow(9.0L, 0.6L) * std::pow(9.0L, 0.6L) + 18 == doctest::Approx(std::pow(9.0, 1.2) + 18));
  CHECK(f.certificate.to_json()["kind"] == "biregularize_floor");
}

TEST_CASE("weak_biregularize branches") {
  Rational e4 = 4, Lp = 4;
  auto dense = weak_biregularize(complete_bipartite(256, 256), 70, make_rational(3, 5), make_rational(3, 5), e4,
                                 Lp, 64);
  CHECK(dense.certificate.branch == "dense");
  CHECK(dense.certificate.ratio_ok);
  CHECK(dense.certificate.all_ok());
  CHECK(check_certificate(dense.certificate, dense.graph));

  auto sparse = weak_biregularize(complete_bipartite(64, 128), 1, make_rational(9, 10), make_rational(9, 10), e4,
                                  Lp, 64);
  CHECK(sparse.certificate.branch == "sparse");
  CHECK(sparse.certificate.power_ok);
  CHECK(sparse.certificate.all_ok());
  CHECK(check_certificate(sparse.certificate, sparse.graph));

  CHECK_THROWS_AS(weak_biregularize(complete_bipartite(64, 128), 1, make_rational(9, 10), make_rational(9, 10),
                                    1, 100, 64),
                  PreconditionViolated);
  CHECK(default_weak_threshold(make_rational(9, 10), make_rational(9, 10), 4, 4) == 512);
}
