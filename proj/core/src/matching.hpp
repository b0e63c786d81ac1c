#pragma once

#include <vector>

namespace extremal::detail {

// Hopcroft-Karp on a bipartite adjacency (left -> right). Fills mate arrays (-1 = free).
int max_bipartite_matching(int nl, int nr, const std::vector<std::vector<int>>& adj,
                           std::vector<int>& mate_l, std::vector<int>& mate_r);

// Strongly connected components (Tarjan, iterative). Returns component id per vertex.
std::vector<int> strong_components(const std::vector<std::vector<int>>& out, int& count);

}  // namespace extremal::detail
