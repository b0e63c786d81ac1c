#include "extremal/generators.hpp"

#include <random>

#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal {

BipartiteGraph complete_bipartite(int m, int n) {
  std::vector<Edge> es;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) es.emplace_back(u, m + v);
  return BipartiteGraph(m, n, es);
}

BipartiteGraph even_cycle(int k) {
  if (k < 2) throw PreconditionViolated("even_cycle needs k >= 2");
  // position i -> M index i/2 (even) or N index (i-1)/2 (odd)
  auto id = [&](int i) { return i % 2 == 0 ? i / 2 : k + i / 2; };
  std::vector<Edge> es;
  for (int i = 0; i < 2 * k; ++i) es.emplace_back(id(i), id((i + 1) % (2 * k)));
  return BipartiteGraph(k, k, es);
}

BipartiteGraph bipartite_path(int edges) {
  int verts = edges + 1;
  int m = (verts + 1) / 2, n = verts / 2;
  auto id = [&](int i) { return i % 2 == 0 ? i / 2 : m + i / 2; };
  std::vector<Edge> es;
  for (int i = 0; i < edges; ++i) es.emplace_back(id(i), id(i + 1));
  return BipartiteGraph(m, n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

BipartiteGraph random_bipartite(int m, int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 1));
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, m + v);
  return BipartiteGraph(m, n, es);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 2));
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

}  // namespace extremal
