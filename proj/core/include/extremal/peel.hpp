#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "extremal/graph.hpp"

namespace extremal {

// Maximal subgraph with minimum degree >= t (the t-core), relabelled; may be empty.
Graph peel_to_min_degree(const Graph& g, int t);

// Maximal subgraph whose M-vertices have degree >= t_M and N-vertices degree >= t_N.
BipartiteGraph peel_bipartite(const BipartiteGraph& g, const Rational& t_M, const Rational& t_N);

// Keeps exactly d edges at every vertex of `side`: the lowest-index neighbours, or a
// seeded random choice. Vertex set unchanged.
BipartiteGraph half_regularize(const BipartiteGraph& g, Side side, int d,
                               std::optional<std::uint64_t> seed = std::nullopt);

// Delta/delta. Throws EmptyGraph when there are no vertices or delta = 0.
Rational almost_regularity(const Graph& g);
// (Delta_M/delta_M, Delta_N/delta_N).
std::pair<Rational, Rational> almost_biregularity(const BipartiteGraph& g);

}  // namespace extremal
