#include "extremal/peel.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal {

namespace {

// Queue-based core peeling with a per-vertex threshold.
std::vector<int> surviving(const Graph& g, const std::vector<std::int64_t>& need) {
  int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> dead(n, 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < need[v]) {
      dead[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (dead[u]) continue;
      if (--deg[u] < need[u]) {
        dead[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!dead[v]) keep.push_back(v);
  return keep;
}

}  // namespace

Graph peel_to_min_degree(const Graph& g, int t) {
  if (t < 0) throw PreconditionViolated("peel threshold must be non-negative");
  std::vector<std::int64_t> need(g.num_vertices(), t);
  return g.induced(surviving(g, need));
}

BipartiteGraph peel_bipartite(const BipartiteGraph& g, const Rational& t_M, const Rational& t_N) {
  if (t_M < 0 || t_N < 0) throw PreconditionViolated("peel thresholds must be non-negative");
  std::int64_t cm = ceil_to_int64(t_M), cn = ceil_to_int64(t_N);
  std::vector<std::int64_t> need(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) need[v] = g.in_M(v) ? cm : cn;
  return g.induced(surviving(g.graph(), need));
}

BipartiteGraph half_regularize(const BipartiteGraph& g, Side side, int d,
                               std::optional<std::uint64_t> seed) {
  if (d < 0) throw PreconditionViolated("half_regularize: negative degree");
  std::vector<Edge> keep;
  std::mt19937_64 rng(seed ? derive_seed(*seed, 0x68616c66u) : 0);
  int lo = g.first(side), hi = lo + g.size(side);
  for (int v = lo; v < hi; ++v) {
    auto nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) < d)
      throw PreconditionViolated("half_regularize: vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(nb.size()) + " < " + std::to_string(d));
    std::vector<int> pick(nb.begin(), nb.end());
    if (seed) std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(d);
    for (int u : pick) keep.emplace_back(std::min(u, v), std::max(u, v));
  }
  return g.edge_subgraph(keep);
}

Rational almost_regularity(const Graph& g) {
  if (g.num_vertices() == 0) throw EmptyGraph("almost_regularity: graph has no vertices");
  int lo = g.min_degree();
  if (lo == 0) throw EmptyGraph("almost_regularity: minimum degree is zero");
  return Rational(BigInt(g.max_degree()), BigInt(lo));
}

std::pair<Rational, Rational> almost_biregularity(const BipartiteGraph& g) {
  DegreeStats s = degree_stats(g);
  if (s.m == 0 || s.n == 0) throw EmptyGraph("almost_biregularity: empty side");
  if (s.min_M == 0 || s.min_N == 0) throw EmptyGraph("almost_biregularity: isolated vertex");
  return {Rational(BigInt(s.max_M), BigInt(s.min_M)), Rational(BigInt(s.max_N), BigInt(s.min_N))};
}

}  // namespace extremal
