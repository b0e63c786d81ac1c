#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, stored as sorted adjacency (CSR).
// origin()[v] is the index of v in the graph it was cut from.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws PreconditionViolated on loops, parallel edges or out-of-range ends.
  Graph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(targets_.size() / 2); }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  bool has_edge(int u, int v) const;
  // u < v, lexicographic.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;
  Rational average_degree() const;

  const std::vector<int>& origin() const { return origin_; }
  void set_origin(std::vector<int> origin);

  // Subgraph induced on `keep` (any order; relabelled by ascending index).
  Graph induced(std::vector<int> keep) const;
  // Same vertex set, only the listed edges (must be edges of this graph).
  Graph edge_subgraph(const std::vector<Edge>& keep) const;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> targets_;
  std::vector<int> origin_;
};

enum class Side { M, N };

inline Side other(Side s) { return s == Side::M ? Side::N : Side::M; }
const char* side_name(Side s);

// Bipartite graph with parts M = {0..m-1}, N = {m..m+n-1}.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Edges use global indices; every edge must join M and N.
  BipartiteGraph(int m, int n, const std::vector<Edge>& edges);
  BipartiteGraph(int m, int n, Graph base);

  const Graph& graph() const { return g_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int size(Side s) const { return s == Side::M ? m_ : n_; }
  int num_vertices() const { return m_ + n_; }
  std::int64_t num_edges() const { return g_.num_edges(); }
  Side side(int v) const { return v < m_ ? Side::M : Side::N; }
  bool in_M(int v) const { return v < m_; }
  int first(Side s) const { return s == Side::M ? 0 : m_; }
  int degree(int v) const { return g_.degree(v); }
  std::span<const int> neighbors(int v) const { return g_.neighbors(v); }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  std::vector<Edge> edges() const { return g_.edges(); }
  const std::vector<int>& origin() const { return g_.origin(); }

  // Keeps the listed vertices, relabelled with M-part first in ascending order.
  BipartiteGraph induced(std::vector<int> keep) const;
  BipartiteGraph edge_subgraph(const std::vector<Edge>& keep) const;
  // Same graph with isolated vertices removed.
  BipartiteGraph without_isolated() const;
  // Parts exchanged: the new M is the old N. origin() still refers to the source indexing.
  BipartiteGraph swapped() const;

 private:
  int m_ = 0;
  int n_ = 0;
  Graph g_;
};

struct DegreeStats {
  int m = 0;
  int n = 0;
  std::int64_t edges = 0;
  int min_M = 0, max_M = 0;
  int min_N = 0, max_N = 0;
  // e/|M| and e/|N|; zero for an empty side.
  Rational avg_M, avg_N;
  // 2e/(m+n)
  Rational avg;
};

DegreeStats degree_stats(const BipartiteGraph& g);

}  // namespace extremal
