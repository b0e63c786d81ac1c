#include "extremal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "extremal/errors.hpp"

namespace extremal {

Graph::Graph(int n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0), origin_(n) {
  if (n < 0) throw PreconditionViolated("negative vertex count");
  std::iota(origin_.begin(), origin_.end(), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionViolated("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw PreconditionViolated("self-loop at " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.assign(offsets_[n], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto b = targets_.begin() + offsets_[v], e = targets_.begin() + offsets_[v + 1];
    std::sort(b, e);
    if (std::adjacent_find(b, e) != e)
      throw PreconditionViolated("parallel edge at vertex " + std::to_string(v));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Rational Graph::average_degree() const {
  if (n_ == 0) return Rational(0);
  return Rational(BigInt(2 * num_edges()), BigInt(n_));
}

void Graph::set_origin(std::vector<int> origin) {
  if (static_cast<int>(origin.size()) != n_) throw PreconditionViolated("origin size mismatch");
  origin_ = std::move(origin);
}

Graph Graph::induced(std::vector<int> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n_) throw PreconditionViolated("induced: vertex out of range");
    pos[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (int u : keep)
    for (int v : neighbors(u))
      if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  Graph h(static_cast<int>(keep.size()), es);
  std::vector<int> org(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) org[i] = origin_[keep[i]];
  h.origin_ = std::move(org);
  return h;
}

Graph Graph::edge_subgraph(const std::vector<Edge>& keep) const {
  for (auto [u, v] : keep)
    if (!has_edge(u, v)) throw PreconditionViolated("edge_subgraph: not an edge of the host");
  Graph h(n_, keep);
  h.origin_ = origin_;
  return h;
}

const char* side_name(Side s) { return s == Side::M ? "M" : "N"; }

BipartiteGraph::BipartiteGraph(int m, int n, const std::vector<Edge>& edges)
    : BipartiteGraph(m, n, Graph(m + n, edges)) {}

BipartiteGraph::BipartiteGraph(int m, int n, Graph base) : m_(m), n_(n), g_(std::move(base)) {
  if (m < 0 || n < 0 || g_.num_vertices() != m + n)
    throw PreconditionViolated("bipartite part sizes do not match vertex count");
  for (int u = 0; u < m_; ++u)
    for (int v : g_.neighbors(u))
      if (v < m_) throw PreconditionViolated("edge inside part M");
  for (int u = m_; u < m_ + n_; ++u)
    for (int v : g_.neighbors(u))
      if (v >= m_) throw PreconditionViolated("edge inside part N");
}

BipartiteGraph BipartiteGraph::induced(std::vector<int> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  int mm = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), m_) - keep.begin());
  Graph h = g_.induced(keep);
  return BipartiteGraph(mm, static_cast<int>(keep.size()) - mm, std::move(h));
}

BipartiteGraph BipartiteGraph::edge_subgraph(const std::vector<Edge>& keep) const {
  return BipartiteGraph(m_, n_, g_.edge_subgraph(keep));
}

BipartiteGraph BipartiteGraph::without_isolated() const {
  std::vector<int> keep;
  for (int v = 0; v < num_vertices(); ++v)
    if (degree(v) > 0) keep.push_back(v);
  return induced(std::move(keep));
}

BipartiteGraph BipartiteGraph::swapped() const {
  auto relabel = [&](int v) { return v < m_ ? v + n_ : v - m_; };
  std::vector<Edge> es;
  for (auto [u, v] : g_.edges()) es.emplace_back(relabel(u), relabel(v));
  Graph h(m_ + n_, es);
  std::vector<int> org(m_ + n_);
  for (int v = 0; v < m_ + n_; ++v) org[relabel(v)] = g_.origin()[v];
  h.set_origin(std::move(org));
  return BipartiteGraph(n_, m_, std::move(h));
}

DegreeStats degree_stats(const BipartiteGraph& g) {
  DegreeStats s;
  s.m = g.m();
  s.n = g.n();
  s.edges = g.num_edges();
  auto scan = [&](int lo, int hi, int& mn, int& mx) {
    mn = 0;
    mx = 0;
    for (int v = lo; v < hi; ++v) {
      mn = v == lo ? g.degree(v) : std::min(mn, g.degree(v));
      mx = std::max(mx, g.degree(v));
    }
  };
  scan(0, g.m(), s.min_M, s.max_M);
  scan(g.m(), g.m() + g.n(), s.min_N, s.max_N);
  BigInt e(s.edges);
  s.avg_M = s.m ? Rational(e, BigInt(s.m)) : Rational(0);
  s.avg_N = s.n ? Rational(e, BigInt(s.n)) : Rational(0);
  s.avg = s.m + s.n ? Rational(2 * e, BigInt(s.m + s.n)) : Rational(0);
  return s;
}

}  // namespace extremal
