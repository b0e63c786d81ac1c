#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct LightPairGraph {
  Graph graph;  // on M = 0..m-1
  // (u, v, number of 2-paths u-w-v), u < v, for every edge of graph.
  std::vector<std::tuple<int, int, std::int64_t>> multiplicity;
};

// M-pairs joined by at least one and fewer than h^4 two-paths.
LightPairGraph light_pair_graph(const BipartiteGraph& g, std::int64_t h);

struct LightPathOptions {
  std::uint64_t max_paths = 1'000'000;
  // When set, the report includes gamma |M| d_M^ceil(k/2) d_N^floor(k/2).
  std::optional<long double> gamma;
};

struct LightPathReport {
  std::int64_t pair_edges = 0;
  std::int64_t peeled_vertices = 0;
  std::int64_t peeled_min_degree = 0;
  std::uint64_t found = 0;
  bool capped = false;
  std::optional<long double> target;
};

struct LightPathCollection {
  std::vector<std::vector<int>> paths;  // k+1 vertices each, starting in M
  LightPathReport report;
};

// k-paths starting in M in which every 2-path with both ends in M is h-light.
LightPathCollection light_path_collection(const BipartiteGraph& g, int k, std::int64_t h,
                                          const LightPathOptions& opt = {});

struct HeavyAdmissibleCounts {
  std::uint64_t copies = 0;
  std::uint64_t mm = 0;
  std::uint64_t nn = 0;
  std::uint64_t mixed = 0;
};

// Eta-heavy eta-admissible copies of the labelled j-path among all copies in g, by
// the sides of the two ends. Throws TooLarge past the enumeration guard.
HeavyAdmissibleCounts count_heavy_admissible(const BipartiteGraph& g, int j, std::int64_t eta);

}  // namespace extremal
