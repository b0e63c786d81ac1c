#pragma once

#include <cstdint>

#include "extremal/graph.hpp"

namespace extremal {

BipartiteGraph complete_bipartite(int m, int n);
// Even cycle C_{2k} with M = even positions.
BipartiteGraph even_cycle(int k);
// Path with `edges` edges starting in M.
BipartiteGraph bipartite_path(int edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
// Each cross pair present independently with probability p.
BipartiteGraph random_bipartite(int m, int n, double p, std::uint64_t seed);
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace extremal
